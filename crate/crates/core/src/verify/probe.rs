use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::exact::{binomial, rint, Rational};

/// Both sides of the resummed Legendre translation formula
/// `P_l(x+h) = sum_lambda (-2h)^lambda C(l+lambda, l) P_{l+lambda}(x)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TranslationProbe {
    pub l: u32,
    pub h: String,
    pub x: String,
    pub terms: u32,
    pub lhs: String,
    pub rhs: String,
    pub residual: String,
    pub lhs_approx: f64,
    pub rhs_approx: f64,
    pub residual_approx: f64,
    #[serde(skip)]
    pub residual_exact: Rational,
}

/// `[P_0(x), ..., P_n(x)]` by Bonnet's recursion.
pub fn legendre_values(x: &Rational, n: u32) -> Vec<Rational> {
    let mut out = vec![rint(1), x.clone()];
    for k in 1..n as i64 {
        let next = (rint(2 * k + 1) * x * &out[k as usize] - rint(k) * &out[k as usize - 1]) / rint(k + 1);
        out.push(next);
    }
    out.truncate(n as usize + 1);
    out
}

/// Evaluates both sides exactly with `terms` summands; never asserts.
pub fn probe_translation(l: u32, h: &Rational, x: &Rational, terms: u32) -> TranslationProbe {
    let lhs = legendre_values(&(x + h), l)[l as usize].clone();
    let values = legendre_values(x, l + terms);
    let t = rint(-2) * h;
    let mut rhs = Rational::zero();
    let mut power = rint(1);
    for lam in 0..terms {
        rhs += &power * Rational::from_integer(binomial(l + lam, l)) * &values[(l + lam) as usize];
        power *= &t;
    }
    let residual = &lhs - &rhs;
    let approx = |r: &Rational| r.to_f64().unwrap_or(f64::NAN);
    TranslationProbe {
        l,
        h: h.to_string(),
        x: x.to_string(),
        terms,
        lhs_approx: approx(&lhs),
        rhs_approx: approx(&rhs),
        residual_approx: approx(&residual),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        residual: residual.to_string(),
        residual_exact: residual,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn bonnet_values() {
        let v = legendre_values(&rat(1, 2), 3);
        assert_eq!(v, vec![rint(1), rat(1, 2), rat(-1, 8), rat(-7, 16)]);
    }

    #[test]
    fn probe_examples() {
        let p = probe_translation(0, &rat(1, 10), &rat(1, 2), 40);
        assert_eq!(p.lhs, "1");
        assert!((p.rhs_approx - 1.0 / 1.24f64.sqrt()).abs() < 1e-12);
        assert!((p.residual_approx - 0.102).abs() < 1e-3);
        assert!(probe_translation(0, &rint(0), &rat(3, 7), 1).residual_exact.is_zero());
        assert!(!probe_translation(1, &rat(1, 10), &rat(1, 2), 40).residual_exact.is_zero());
    }
}
