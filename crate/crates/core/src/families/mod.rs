//! The complementary families and the general `(sigma, w)` frameworks.

mod explicit;
mod genfunc;
mod hypergeom;
mod legendre;
mod limits;
mod recursion;
mod rodrigues;
mod spec;

pub use explicit::explicit_cp;
pub use genfunc::{family_framework, framework_gf, gf_spec, taylor_ratio};
pub use hypergeom::{gauss_poly, kummer_poly};
pub use legendre::{associated_component, classical_legendre, legendre_norm};
pub use limits::{classical_hermite, classical_laguerre, classical_limit_drift, limit_pair};
pub use recursion::recursion_all;
pub use rodrigues::{
    classical_legendre_spec, framework_rodrigues, framework_rodrigues_unshifted, legendre_lift_spec,
    pre_laguerre_lift_spec, rel_hermite_lift_spec, rodrigues_spec,
};
pub use spec::{Family, FamilyParams, FamilySpec, Framework, ParamMap, Route};

use crate::error::{Error, Result};
use crate::genfun::expand_gf;
use crate::symdiff::rodrigues_cp_all;

fn check_route(spec: &FamilySpec, route: Route) -> Result<()> {
    if spec.family().routes().contains(&route) {
        Ok(())
    } else {
        Err(Error::UnavailableRoute { family: spec.family().name().into(), route: route.name().into() })
    }
}

fn check_cap(spec: &FamilySpec, nu: u32) -> Result<()> {
    match spec.nu_cap() {
        Some(max) if nu > max => Err(Error::NuOutOfRange { nu, max }),
        _ => Ok(()),
    }
}

/// `[P_0, ..., P_nu_max]` by the chosen route.
pub fn cp_all(spec: &FamilySpec, nu_max: u32, route: Route) -> Result<Vec<crate::Poly>> {
    check_route(spec, route)?;
    check_cap(spec, nu_max)?;
    match route {
        Route::Rodrigues => rodrigues_cp_all(&rodrigues_spec(spec)?, nu_max),
        Route::GenFunc => expand_gf(&gf_spec(spec)?, nu_max as usize),
        Route::Recursion => recursion_all(spec, nu_max),
        Route::Explicit => (0..=nu_max).map(|nu| explicit_cp(spec, nu)).collect(),
    }
}

/// The complementary polynomial `P_nu(x, l)` by the chosen route.
pub fn cp(spec: &FamilySpec, nu: u32, route: Route) -> Result<crate::Poly> {
    check_route(spec, route)?;
    check_cap(spec, nu)?;
    match route {
        Route::Rodrigues => crate::symdiff::rodrigues_cp(&rodrigues_spec(spec)?, nu),
        Route::Explicit => explicit_cp(spec, nu),
        _ => Ok(cp_all(spec, nu, route)?.pop().expect("nonempty")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rint};
    use crate::Poly;

    fn all_routes(spec: &FamilySpec, nu: u32) -> Vec<Poly> {
        spec.family().routes().iter().map(|r| cp(spec, nu, *r).unwrap()).collect()
    }

    fn assert_all(spec: &FamilySpec, nu: u32, expected: Poly) {
        for (route, got) in spec.family().routes().iter().zip(all_routes(spec, nu)) {
            assert_eq!(got, expected, "route {route}");
        }
    }

    #[test]
    fn spec_examples() {
        assert_all(&FamilySpec::legendre(2), 1, Poly::from_ints(&[0, -4]));
        assert_all(&FamilySpec::confluent(rint(1), 2), 2, Poly::from_ints(&[2, -4, 1]));
        assert_all(
            &FamilySpec::hypergeometric(rint(0), rint(0), rat(1, 2), 2),
            2,
            Poly::new(vec![rat(3, 4), rint(-6), rint(6)]),
        );
        assert_all(&FamilySpec::rel_hermite(rint(1)).unwrap(), 2, Poly::from_ints(&[-2, 0, 6]));
        assert_all(&FamilySpec::pre_laguerre(rint(2), 2).unwrap(), 1, Poly::from_ints(&[2]));
    }

    #[test]
    fn errors() {
        assert!(matches!(cp(&FamilySpec::legendre(2), 1, Route::Explicit), Err(Error::UnavailableRoute { .. })));
        assert!(matches!(cp(&FamilySpec::legendre(2), 3, Route::GenFunc), Err(Error::NuOutOfRange { nu: 3, max: 2 })));
        assert!(FamilySpec::rel_hermite(rint(0)).is_err());
        assert!(FamilySpec::pre_laguerre(rint(-1), 2).is_err());
    }

    #[test]
    fn frameworks_reproduce_families() {
        let specs = [
            FamilySpec::legendre(3),
            FamilySpec::confluent(rat(1, 3), 2),
            FamilySpec::hypergeometric(rat(1, 2), rint(1), rat(3, 2), 2),
            FamilySpec::rel_hermite(rat(7, 2)).unwrap(),
            FamilySpec::pre_laguerre(rint(2), 3).unwrap(),
        ];
        for spec in specs {
            let (fw, flip) = family_framework(&spec).unwrap();
            let mut gf = framework_gf(&fw, spec.l).unwrap();
            if flip {
                gf = gf.negate_y();
            }
            assert_eq!(gf.canonical(), gf_spec(&spec).unwrap().canonical(), "{}", spec.family());
            let general = FamilySpec::general(fw, spec.l).unwrap();
            let nu = spec.nu_cap().unwrap_or(4);
            let mut via_general = cp_all(&general, nu, Route::Rodrigues).unwrap();
            if flip {
                for (k, p) in via_general.iter_mut().enumerate() {
                    if k % 2 == 1 {
                        *p = -&*p;
                    }
                }
            }
            assert_eq!(via_general, cp_all(&spec, nu, Route::Rodrigues).unwrap(), "{}", spec.family());
        }
    }
}
