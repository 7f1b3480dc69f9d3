use num_traits::One;

use super::expr::{FactoredExpr, FactoredTerm};
use crate::error::Result;
use crate::exact::{rint, Poly, Rational};

/// Exponent `constant + per_nu * nu` of a prefactor base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineExponent {
    pub constant: Rational,
    pub per_nu: Rational,
}

impl AffineExponent {
    pub fn new(constant: Rational, per_nu: Rational) -> Self {
        AffineExponent { constant, per_nu }
    }

    pub fn at(&self, nu: u32) -> Rational {
        &self.constant + &self.per_nu * rint(nu as i64)
    }
}

/// A Rodrigues-type formula `P_nu = scale * (-1)^{nu if alternating}
/// * prod base^{exponent(nu)} * exp(prefactor_exp) * d^nu/dx^nu inner`.
#[derive(Clone, Debug)]
pub struct RodriguesSpec {
    pub inner: FactoredTerm,
    pub prefactor: Vec<(Poly, AffineExponent)>,
    pub prefactor_exp: Poly,
    pub scale: Rational,
    pub alternating: bool,
}

impl RodriguesSpec {
    fn prefactor_at(&self, nu: u32) -> Result<FactoredTerm> {
        let mut k = self.scale.clone();
        if self.alternating && nu % 2 == 1 {
            k = -k;
        }
        FactoredTerm::new(
            Poly::constant(k),
            self.prefactor.iter().map(|(b, e)| (b.clone(), e.at(nu))),
            self.prefactor_exp.clone(),
        )
    }

    fn extract(&self, derivative: &FactoredExpr, nu: u32) -> Result<Poly> {
        derivative.mul_term(&self.prefactor_at(nu)?).to_poly()
    }
}

/// Applies `nu` derivatives to the inner object, multiplies by the prefactor
/// and extracts the polynomial; every non-polynomial factor must cancel.
pub fn rodrigues_cp(spec: &RodriguesSpec, nu: u32) -> Result<Poly> {
    let mut d = FactoredExpr::from(spec.inner.clone());
    for _ in 0..nu {
        d = d.diff();
    }
    spec.extract(&d, nu)
}

/// `[P_0, ..., P_nu_max]`, differentiating incrementally.
pub fn rodrigues_cp_all(spec: &RodriguesSpec, nu_max: u32) -> Result<Vec<Poly>> {
    let mut d = FactoredExpr::from(spec.inner.clone());
    let mut out = Vec::with_capacity(nu_max as usize + 1);
    for nu in 0..=nu_max {
        if nu > 0 {
            d = d.diff();
        }
        out.push(spec.extract(&d, nu)?);
    }
    Ok(out)
}

impl Default for RodriguesSpec {
    fn default() -> Self {
        RodriguesSpec {
            inner: FactoredTerm::poly(Poly::one()),
            prefactor: Vec::new(),
            prefactor_exp: Poly::zero(),
            scale: Rational::one(),
            alternating: false,
        }
    }
}
