use std::sync::Arc;

use super::ctx::{assert_report, at, fact, point_of, routes_agree, yseries, Ctx, Tally};
use super::limits::limit_check;
use super::report::{CheckReport, GridPoint};
use crate::error::Result;
use crate::exact::{binomial, gen_binom, rint, Poly, RatFunc, Rational};
use crate::families::{pre_laguerre_lift_spec, Family, FamilySpec, Route};
use crate::genfun::SeriesY;
use crate::symdiff::{pearson_check, rodrigues_cp, FactoredTerm, PearsonForm};

fn specs(ctx: &Ctx) -> Vec<FamilySpec> {
    let g = ctx.grid;
    g.pre_laguerre_n
        .iter()
        .flat_map(|n| (0..=g.pre_laguerre_l_max).filter_map(move |l| FamilySpec::pre_laguerre(n.clone(), l).ok()))
        .collect()
}

fn n_of(spec: &FamilySpec) -> Rational {
    spec.named_params()[0].1.clone()
}

fn cps(ctx: &Ctx, spec: &FamilySpec) -> Result<Arc<Vec<Poly>>> {
    ctx.cps(spec, Route::Rodrigues, ctx.grid.pre_laguerre_nu_max + 1)
}

fn order(ctx: &Ctx) -> usize {
    ctx.grid.pre_laguerre_nu_max as usize + 2
}

fn nus(ctx: &Ctx) -> std::ops::RangeInclusive<u32> {
    0..=ctx.grid.pre_laguerre_nu_max
}

fn per_spec(
    ctx: &Ctx,
    id: &str,
    f: impl Fn(&mut Tally, &FamilySpec, &Rational, &[Poly]) -> Result<()>,
) -> Vec<CheckReport> {
    specs(ctx).into_iter().map(|s| assert_report(id, point_of(&s), |t| f(t, &s, &n_of(&s), &cps(ctx, &s)?))).collect()
}

/// `1 + x/N`
fn w(big_n: &Rational) -> Poly {
    Poly::linear(rint(1), big_n.recip())
}

/// `(x/N)^k`
fn x_over_n_pow(big_n: &Rational, k: u32) -> Poly {
    Poly::monomial(num_traits::pow(big_n.recip(), k as usize), k as usize)
}

/// `(1 + xy/N)^alpha` as a series.
fn xy_factor(big_n: &Rational, alpha: &Rational, k: usize) -> Result<SeriesY> {
    SeriesY::binpow(&yseries(vec![Poly::zero(), Poly::monomial(big_n.recip(), 1)], k), alpha, k)
}

pub fn p1(ctx: &Ctx) -> Vec<CheckReport> {
    per_spec(ctx, "P1", |t, s, big_n, ps| {
        routes_agree(ctx, t, s, ctx.grid.pre_laguerre_nu_max)?;
        let l = s.l;
        let scale = ctx.ki("lift", 1);
        // L_l = (1+x/N)^{N+l} d^{l-nu} [x^{l-nu} P_nu (1+x/N)^{-N-nu}]
        for nu in 0..=l {
            let lifted = ctx.cache.memo(format!("prelag-lift|{big_n}|{l}|{nu}|{}", l - nu), || {
                rodrigues_cp(&pre_laguerre_lift_spec(big_n, l, &ps[nu as usize], nu)?, l - nu)
            })?;
            t.eq_poly(|| format!("recursive definition from nu={nu}"), &lifted, &ps[l as usize].scale(&scale));
        }
        // P_{mu+1} from P_mu by one derivative
        for mu in 0..ctx.grid.pre_laguerre_nu_max {
            let lifted = ctx.cache.memo(format!("prelag-lift|{big_n}|{l}|{mu}|1"), || {
                rodrigues_cp(&pre_laguerre_lift_spec(big_n, l, &ps[mu as usize], mu)?, 1)
            })?;
            t.eq_poly(|| format!("step from mu={mu}"), &lifted, &ps[mu as usize + 1].scale(&scale));
        }
        Ok(())
    })
}

pub fn p2(ctx: &Ctx) -> Vec<CheckReport> {
    // P_{nu+1} + [nu - l + x((2nu-l)/N + 1)] P_nu + nu((nu-l-1)/N + 1) x (1+x/N) P_{nu-1} = 0
    per_spec(ctx, "P2", |t, s, big_n, ps| {
        let l = s.l_rat();
        for nu in nus(ctx) {
            let n = rint(nu as i64);
            let lin = Poly::linear(&n - &l, (ctx.ki("two", 2) * &n - &l) / big_n + ctx.ki("one_a", 1));
            let k = &n * ((&n - &l - ctx.ki("one_b", 1)) / big_n + ctx.ki("one_c", 1));
            let last = Poly::new(vec![rint(0), rint(1), ctx.ki("w_x", 1) / big_n]);
            let res = &(&ps[nu as usize + 1].scale(&ctx.ki("lead", 1)) + &(&lin * &ps[nu as usize]))
                + &(&last * &at(ps, nu as i64 - 1)).scale(&k);
            t.zero(|| format!("nu={nu}"), &res);
        }
        Ok(())
    })
}

pub fn p3(ctx: &Ctx) -> Vec<CheckReport> {
    // sum C(N, nu-lambda) (x/N)^{nu-lambda} P_lambda / lambda! = C(l, nu) (1+x/N)^nu, or 0 past l
    per_spec(ctx, "P3", |t, s, big_n, ps| {
        let top = ctx.ki("N_coeff", 1) * big_n;
        for nu in nus(ctx) {
            let lhs = (0..=nu).fold(Poly::zero(), |acc, lam| {
                let k = gen_binom(&top, nu - lam) / fact(lam);
                &acc + &(&x_over_n_pow(big_n, nu - lam) * &ps[lam as usize]).scale(&k)
            });
            let rhs = if nu <= s.l {
                let base = Poly::linear(ctx.ki("rhs_one", 1), big_n.recip());
                base.pow(nu).scale(&Rational::from_integer(binomial(s.l, nu)))
            } else {
                Poly::zero()
            };
            t.eq_poly(|| format!("nu={nu}"), &lhs, &rhs);
        }
        // (1 + xy/N)^N P(y, x, l) = [1 + y (1 + x/N)]^l
        let k = order(ctx);
        let lhs = &xy_factor(big_n, &(ctx.ki("gf_N", 1) * big_n), k)? * &*ctx.gf(s, k)?;
        let inner = yseries(vec![Poly::zero(), w(big_n).scale(&ctx.ki("gf_one", 1))], k);
        t.eq_series(|| "GF form".into(), &lhs, &SeriesY::binpow(&inner, &s.l_rat(), k)?);
        Ok(())
    })
}

fn convolution(a: &[Poly], b: &[Poly], nu: u32) -> Poly {
    (0..=nu).fold(Poly::zero(), |acc, n1| {
        let w = Rational::from_integer(binomial(nu, n1));
        &acc + &(&a[n1 as usize] * &b[(nu - n1) as usize]).scale(&w)
    })
}

pub fn p4(ctx: &Ctx) -> Vec<CheckReport> {
    let m = ctx.grid.composition_l_max;
    let k = order(ctx);
    let mut out = Vec::new();
    for big_n in &ctx.grid.pre_laguerre_n {
        for l1 in 0..=m {
            for l2 in l1..=m {
                let point = GridPoint::new("prelaguerre").param("N", big_n).param("l1", l1).param("l2", l2);
                out.push(assert_report("P4", point, |t| {
                    let at_l = |l: u32| FamilySpec::pre_laguerre(big_n.clone(), l);
                    let (s1, s2, s12) = (at_l(l1)?, at_l(l2)?, at_l(l1 + l2)?);
                    let (p1, p2, p12) = (cps(ctx, &s1)?, cps(ctx, &s2)?, cps(ctx, &s12)?);
                    let first = ctx.ki("first_N", 1) * big_n;
                    let second = -(ctx.ki("second_N", 1) * big_n);
                    for nu in nus(ctx) {
                        // P_nu(l1+l2) = sum_mu nu!/mu! C(N, nu-mu) (x/N)^{nu-mu} conv_mu(l1, l2)
                        let rhs = (0..=nu).fold(Poly::zero(), |acc, mu| {
                            let c = fact(nu) / fact(mu) * gen_binom(&first, nu - mu);
                            &acc + &(&x_over_n_pow(big_n, nu - mu) * &convolution(&p1, &p2, mu)).scale(&c)
                        });
                        t.eq_poly(|| format!("first law nu={nu}"), &p12[nu as usize], &rhs);
                        // conv_nu(l1, l2) = sum_lambda nu!/lambda! C(-N, nu-lambda) (x/N)^{nu-lambda} P_lambda(l1+l2)
                        let rhs = (0..=nu).fold(Poly::zero(), |acc, lam| {
                            let c = fact(nu) / fact(lam) * gen_binom(&second, nu - lam);
                            &acc + &(&x_over_n_pow(big_n, nu - lam) * &p12[lam as usize]).scale(&c)
                        });
                        t.eq_poly(|| format!("second law nu={nu}"), &convolution(&p1, &p2, nu), &rhs);
                    }
                    let prod = &*ctx.gf(&s1, k)? * &*ctx.gf(&s2, k)?;
                    let g12 = ctx.gf(&s12, k)?;
                    let up = xy_factor(big_n, &(ctx.ki("gf_first", 1) * big_n), k)?;
                    t.eq_series(|| "GF addition".into(), &g12, &(&up * &prod));
                    let down = xy_factor(big_n, &-(ctx.ki("gf_second", 1) * big_n), k)?;
                    t.eq_series(|| "GF product".into(), &prod, &(&down * &*g12));
                    Ok(())
                }));
            }
        }
    }
    out
}

pub fn p5(ctx: &Ctx) -> Vec<CheckReport> {
    per_spec(ctx, "P5", |t, s, big_n, ps| {
        let l = s.l_rat();
        // P_1 = l (1 + x/N) - x
        let p1 = &w(big_n).scale(&(ctx.ki("p1_l", 1) * &l)) - &Poly::monomial(ctx.ki("p1_x", 1), 1);
        t.eq_poly(|| "P_1".into(), &ps[1], &p1);
        let base = ctx.ki("sign_base", -1);
        for nu in nus(ctx) {
            let p = &ps[nu as usize];
            // P_nu(0) = nu! C(l, nu), zero past l
            let want = fact(nu) * Rational::from_integer(binomial(s.l, nu)) * ctx.ki("zero_scale", 1);
            t.eq_rat(|| format!("P_{nu}(0)"), &p.eval(&rint(0)), &want);
            // P_nu(-N) = nu! (-1)^nu C(-N, nu)
            let want = fact(nu) * num_traits::pow(base.clone(), nu as usize) * gen_binom(&-big_n.clone(), nu);
            t.eq_rat(|| format!("P_{nu}(-N)"), &p.eval(&-big_n.clone()), &want);
        }
        Ok(())
    })
}

pub fn p6(ctx: &Ctx) -> Vec<CheckReport> {
    // (sigma w)' = tau w, sigma = x, w = (1+x/N)^{-N}, tau = 1 - x / (1 + x/N)
    let mut out = Vec::new();
    for big_n in &ctx.grid.pre_laguerre_n {
        out.push(assert_report("P6", GridPoint::new("prelaguerre").param("N", big_n), |t| {
            let weight = FactoredTerm::new(Poly::one(), vec![(w(big_n), -big_n.clone())], Poly::zero())?;
            let frac = RatFunc::new(Poly::monomial(ctx.ki("tau_x", 1), 1), w(big_n))?;
            let tau = &RatFunc::constant(ctx.ki("tau_one", 1)) - &frac;
            t.holds(|| "Pearson equation".into(), pearson_check(&Poly::x(), &weight, &tau, PearsonForm::Flux)?);
            Ok(())
        }));
    }
    out
}

pub fn p7(ctx: &Ctx) -> Vec<CheckReport> {
    limit_check(ctx, "P7", Family::PreLaguerre, (1, "one", 1))
}
