//! Classical limits as `N -> infinity`.

use num_traits::Signed;

use super::spec::FamilySpec;
use super::{cp, Family, Route};
use crate::error::{Error, Result};
use crate::exact::{Poly, Rational};
use crate::symdiff::{rodrigues_cp, FactoredTerm, RodriguesSpec};

/// Classical Hermite `H_n = (-1)^n e^{x^2} d^n e^{-x^2}`.
pub fn classical_hermite(n: u32) -> Result<Poly> {
    let spec = RodriguesSpec {
        inner: FactoredTerm::new(Poly::one(), vec![], Poly::from_ints(&[0, 0, -1]))?,
        prefactor_exp: Poly::from_ints(&[0, 0, 1]),
        alternating: true,
        ..Default::default()
    };
    rodrigues_cp(&spec, n)
}

/// Laguerre-type `e^x d^n (x^n e^{-x})`, the confluent `R_n` at `c = 1`.
pub fn classical_laguerre(n: u32) -> Result<Poly> {
    cp(&FamilySpec::confluent(Rational::from_integer(1.into()), n), n, Route::Rodrigues)
}

/// The polynomial for `N` and its classical target.
pub fn limit_pair(family: Family, n: u32, big_n: &Rational) -> Result<(Poly, Poly)> {
    match family {
        Family::RelHermite => {
            Ok((cp(&FamilySpec::rel_hermite(big_n.clone())?, n, Route::Rodrigues)?, classical_hermite(n)?))
        }
        Family::PreLaguerre => {
            Ok((cp(&FamilySpec::pre_laguerre(big_n.clone(), n)?, n, Route::Rodrigues)?, classical_laguerre(n)?))
        }
        other => Err(Error::Degenerate(format!("no classical limit for {other}"))),
    }
}

/// Max coefficient deviation from the classical target, per `N`.
pub fn classical_limit_drift(family: Family, n: u32, n_values: &[Rational]) -> Result<Vec<(Rational, Rational)>> {
    n_values
        .iter()
        .map(|big_n| {
            if !big_n.is_positive() {
                return Err(Error::Degenerate(format!("N must be positive, got {big_n}")));
            }
            let (p, target) = limit_pair(family, n, big_n)?;
            Ok((big_n.clone(), p.max_abs_diff(&target)))
        })
        .collect()
}
