use std::collections::BTreeMap;

use num_traits::Zero;

use super::series::SeriesY;
use crate::error::{Error, Result};
use crate::exact::{Poly, RatFunc, Rational};

/// Polynomial in `y` with rational-function coefficients, ascending.
pub type YPoly = Vec<RatFunc>;

/// Builds a [`YPoly`] from polynomial coefficients.
pub fn ypoly(coeffs: Vec<Poly>) -> YPoly {
    let mut out: YPoly = coeffs.into_iter().map(RatFunc::from).collect();
    while out.last().is_some_and(RatFunc::is_zero) {
        out.pop();
    }
    out
}

/// `inner(x, y)^exponent` with `inner(x, 0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GfFactor {
    pub inner: YPoly,
    pub exponent: Rational,
}

/// Canonical key of a [`YPoly`]: `(num, den)` per coefficient.
pub type YKey = Vec<(Poly, Poly)>;

/// Closed-form generating function: a product of binomial factors and an
/// optional `exp(arg(x, y))` with `arg(x, 0) = 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GfSpec {
    pub factors: Vec<GfFactor>,
    pub exp_arg: Option<YPoly>,
}

impl GfSpec {
    pub fn factor(mut self, inner: YPoly, exponent: Rational) -> Self {
        self.factors.push(GfFactor { inner, exponent });
        self
    }

    pub fn with_exp(mut self, arg: YPoly) -> Self {
        self.exp_arg = Some(arg);
        self
    }

    /// Substitutes `y -> -y` in every factor.
    pub fn negate_y(&self) -> GfSpec {
        let flip = |p: &YPoly| -> YPoly {
            p.iter().enumerate().map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() }).collect()
        };
        GfSpec {
            factors: self
                .factors
                .iter()
                .map(|f| GfFactor { inner: flip(&f.inner), exponent: f.exponent.clone() })
                .collect(),
            exp_arg: self.exp_arg.as_ref().map(flip),
        }
    }

    /// Canonical factor list: trivial factors dropped, equal inners merged by
    /// exponent addition, sorted. Two specs with equal canonical forms denote
    /// the same function factor by factor.
    pub fn canonical(&self) -> (Vec<(YKey, Rational)>, Option<YKey>) {
        let key = |p: &YPoly| -> YKey {
            let mut v: YKey = p.iter().map(|c| (c.num().clone(), c.den().clone())).collect();
            while v.last().is_some_and(|(n, _)| n.is_zero()) {
                v.pop();
            }
            v
        };
        let mut merged: BTreeMap<YKey, Rational> = BTreeMap::new();
        for f in &self.factors {
            let k = key(&f.inner);
            if k.len() <= 1 || f.exponent.is_zero() {
                continue;
            }
            *merged.entry(k).or_insert_with(Rational::zero) += &f.exponent;
        }
        let factors = merged.into_iter().filter(|(_, e)| !e.is_zero()).collect();
        let exp = self.exp_arg.as_ref().map(key).filter(|k| !k.is_empty());
        (factors, exp)
    }

    /// The series truncated after `y^order`.
    pub fn series(&self, order: usize) -> Result<SeriesY> {
        let mut acc = SeriesY::one(order);
        for f in &self.factors {
            let head = f.inner.first().cloned().unwrap_or_else(RatFunc::zero);
            if head != RatFunc::one() {
                return Err(Error::Degenerate(format!("GF factor with inner(x,0) = {head}")));
            }
            let mut u = f.inner.clone();
            u[0] = RatFunc::zero();
            acc = &acc * &SeriesY::binpow(&SeriesY::new(u, order), &f.exponent, order)?;
        }
        if let Some(arg) = &self.exp_arg {
            acc = &acc * &SeriesY::exp(&SeriesY::new(arg.clone(), order), order)?;
        }
        Ok(acc)
    }
}

/// `[P_0, ..., P_order]` with `P_nu = nu! [y^nu]`; each must be a polynomial.
pub fn expand_gf(spec: &GfSpec, order: usize) -> Result<Vec<Poly>> {
    spec.series(order)?.to_cps()
}
