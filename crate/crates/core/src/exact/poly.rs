use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{rint, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial over the rationals, ascending coefficients.
///
/// The representation is canonical: trailing zeros are trimmed and the zero
/// polynomial has no coefficients, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rint(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Poly::from_ints(&[0, 1])
    }

    /// `c x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    /// `a + b x`
    pub fn linear(a: Rational, b: Rational) -> Self {
        Poly::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Lowest-order nonzero coefficient.
    pub fn trailing(&self) -> Option<&Rational> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, k: &Rational) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * rint(k as i64)).collect())
    }

    pub fn nth_derivative(&self, n: usize) -> Poly {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }

    /// `p(q(x))` by Horner.
    pub fn compose(&self, q: &Poly) -> Poly {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| &(&acc * q) + &Poly::constant(c.clone()))
    }

    /// `p(x + h)`.
    pub fn shift(&self, h: &Rational) -> Poly {
        self.compose(&Poly::linear(h.clone(), Rational::one()))
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Poly::zero(),
        }
    }

    /// Euclidean division; errors when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / &lc;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * d;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Division that must leave no remainder.
    pub fn exact_quotient(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible { dividend: self.to_string(), divisor: divisor.to_string() })
        }
    }

    /// Monic gcd by the Euclidean algorithm over the rationals.
    pub fn gcd(a: &Poly, b: &Poly) -> Result<Poly> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let (mut u, mut v) = (a.clone(), b.clone());
        while !v.is_zero() {
            let (_, r) = u.div_rem(&v)?;
            u = v;
            v = r.monic();
        }
        Ok(u.monic())
    }

    /// Largest absolute coefficient difference.
    pub fn max_abs_diff(&self, other: &Poly) -> Rational {
        (self - other).coeffs.iter().map(Signed::abs).max().unwrap_or_else(Rational::zero)
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(&short.coeffs) {
            *o += s;
        }
        Poly::new(out)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Descending human form, e.g. `12x^2 - 4`, `-3/2x + 1`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn canonical_form() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn derivative_example() {
        assert_eq!(p(&[0, -1, 0, 1]).derivative(), p(&[-1, 0, 3]));
    }

    #[test]
    fn exact_quotient_example() {
        assert_eq!(p(&[-1, 0, 1]).exact_quotient(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
        assert!(matches!(p(&[1, 0, 1]).exact_quotient(&p(&[-1, 1])), Err(Error::NotDivisible { .. })));
        assert_eq!(p(&[1]).exact_quotient(&Poly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_example() {
        assert_eq!(Poly::gcd(&p(&[-1, 0, 1]), &p(&[1, -2, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(Poly::gcd(&p(&[0, 2]), &Poly::zero()).unwrap(), p(&[0, 1]));
        assert_eq!(Poly::gcd(&Poly::zero(), &Poly::zero()), Err(Error::ZeroGcd));
    }

    #[test]
    fn shift_and_display() {
        // (x+1)^2 = x^2 + 2x + 1
        assert_eq!(p(&[0, 0, 1]).shift(&rint(1)), p(&[1, 2, 1]));
        assert_eq!(p(&[-4, 0, 12]).to_string(), "12x^2 - 4");
        assert_eq!(Poly::new(vec![rat(3, 4), rint(-6), rint(6)]).to_string(), "6x^2 - 6x + 3/4");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-20i64..20, 1i64..7).prop_map(|(n, d)| rat(n, d))
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec(small_rat(), 0..9).prop_map(Poly::new)
    }

    proptest! {
        #[test]
        fn eval_is_multiplicative(a in small_poly(), b in small_poly(), r in small_rat()) {
            prop_assert_eq!((&a * &b).eval(&r), a.eval(&r) * b.eval(&r));
        }

        #[test]
        fn quotient_inverts_product(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_quotient(&b).unwrap(), a);
        }

        #[test]
        fn degree_is_additive(a in small_poly(), b in small_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!((&a * &b).degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
        }

        #[test]
        fn shift_matches_eval(a in small_poly(), h in small_rat(), r in small_rat()) {
            prop_assert_eq!(a.shift(&h).eval(&r), a.eval(&(&r + &h)));
        }
    }
}
