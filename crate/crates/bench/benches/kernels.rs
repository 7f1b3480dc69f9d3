use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rodrigues_core::exact::{rat, rint};
use rodrigues_core::families::{cp_all, gf_spec, FamilySpec};
use rodrigues_core::genfun::{expand_gf, SeriesY};
use rodrigues_core::verify::{CheckId, GridConfig, Runner};
use rodrigues_core::Poly;

fn routes(c: &mut Criterion) {
    let specs = [
        ("legendre", FamilySpec::legendre(8), 8),
        ("confluent", FamilySpec::confluent(rat(1, 3), 6), 8),
        ("hypergeometric", FamilySpec::hypergeometric(rat(1, 2), rat(-1, 2), rint(1), 5), 6),
        ("relhermite", FamilySpec::rel_hermite(rat(7, 2)).unwrap(), 10),
        ("prelaguerre", FamilySpec::pre_laguerre(rat(7, 2), 6).unwrap(), 8),
    ];
    let mut group = c.benchmark_group("routes");
    for (name, spec, nu_max) in &specs {
        for route in spec.family().routes() {
            group.bench_with_input(BenchmarkId::new(*name, route), route, |b, r| {
                b.iter(|| cp_all(black_box(spec), *nu_max, *r).unwrap())
            });
        }
    }
    group.finish();
}

fn kernels(c: &mut Criterion) {
    let p = Poly::new((1..=12).map(|k| rat(k, k + 1)).collect());
    let q = Poly::new((1..=12).map(|k| rat(1 - k, 2 * k + 1)).collect());
    c.bench_function("poly/mul_deg11", |b| b.iter(|| black_box(&p) * black_box(&q)));
    c.bench_function("poly/gcd_deg11", |b| b.iter(|| Poly::gcd(black_box(&(&p * &q)), black_box(&p)).unwrap()));
    let u = SeriesY::y(12);
    c.bench_function("series/binpow_order12", |b| b.iter(|| SeriesY::binpow(black_box(&u), &rat(1, 3), 12).unwrap()));
    let gf = gf_spec(&FamilySpec::hypergeometric(rat(1, 2), rat(1, 3), rat(3, 2), 4)).unwrap();
    c.bench_function("genfun/expand_hypergeometric_order10", |b| b.iter(|| expand_gf(black_box(&gf), 10).unwrap()));
}

fn suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("suite");
    group.sample_size(10);
    group.bench_function("small_grid_cold", |b| {
        b.iter(|| Runner::new(GridConfig::small()).unwrap().run(&CheckId::all()))
    });
    group.finish();
}

criterion_group!(benches, routes, kernels, suite);
criterion_main!(benches);
