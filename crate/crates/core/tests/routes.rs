use proptest::prelude::*;
use rodrigues_core::exact::{rat, rint};
use rodrigues_core::families::gf_spec;
use rodrigues_core::families::{cp, cp_all, FamilySpec, Route};
use rodrigues_core::genfun::expand_gf;
use rodrigues_core::Rational;

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn positive() -> impl Strategy<Value = Rational> {
    (1i64..=30, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn assert_routes(spec: &FamilySpec, nu_max: u32) {
    let tables: Vec<_> = spec.family().routes().iter().map(|r| (r, cp_all(spec, nu_max, *r).unwrap())).collect();
    for (route, table) in &tables[1..] {
        assert_eq!(table, &tables[0].1, "{route} vs {}", tables[0].0);
    }
    for (nu, p) in tables[0].1.iter().enumerate() {
        assert!(p.degree().unwrap_or(0) <= nu);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn confluent_routes(c in rational(), l in 0u32..5) {
        assert_routes(&FamilySpec::confluent(c, l), 5);
    }

    #[test]
    fn hypergeometric_routes(a in rational(), b in rational(), c in rational(), l in 0u32..4) {
        assert_routes(&FamilySpec::hypergeometric(a, b, c, l), 4);
    }

    #[test]
    fn rel_hermite_routes(n in positive()) {
        assert_routes(&FamilySpec::rel_hermite(n).unwrap(), 6);
    }

    #[test]
    fn pre_laguerre_routes(n in positive(), l in 0u32..5) {
        assert_routes(&FamilySpec::pre_laguerre(n, l).unwrap(), 5);
    }

    #[test]
    fn gf_truncation_coherence(c in rational(), l in 0u32..4, k in 1usize..5) {
        let gf = gf_spec(&FamilySpec::confluent(c, l)).unwrap();
        let short = expand_gf(&gf, k).unwrap();
        let long = expand_gf(&gf, k + 2).unwrap();
        prop_assert_eq!(&short[..], &long[..=k]);
    }

    #[test]
    fn single_and_table_agree(c in rational(), nu in 0u32..6) {
        let spec = FamilySpec::confluent(c, 2);
        for route in [Route::Rodrigues, Route::Explicit, Route::GenFunc] {
            prop_assert_eq!(cp(&spec, nu, route).unwrap(), cp_all(&spec, nu, route).unwrap().pop().unwrap());
        }
    }
}

#[test]
fn legendre_routes_through_ten() {
    for l in 0..=10 {
        assert_routes(&FamilySpec::legendre(l), l);
    }
}

#[test]
fn primary_polynomial_at_nu_equal_l() {
    // R_l = P_l(x, l) for the confluent family at c = 1 is e^x d^l (x^l e^{-x})
    let r2 = cp(&FamilySpec::confluent(rint(1), 2), 2, Route::Rodrigues).unwrap();
    assert_eq!(r2, rodrigues_core::Poly::from_ints(&[2, -4, 1]));
}
