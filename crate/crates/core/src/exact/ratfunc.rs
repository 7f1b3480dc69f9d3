use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Reduced quotient of polynomials: `den` is monic and coprime to `num`.
/// The zero function is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        if den.is_constant() {
            let k = den.coeff(0).recip();
            return Ok(RatFunc { num: num.scale(&k), den: Poly::one() });
        }
        let g = Poly::gcd(&num, &den)?;
        let (num, den) = if g.is_constant() { (num, den) } else { (num.exact_quotient(&g)?, den.exact_quotient(&g)?) };
        let lc = den.leading().unwrap().recip();
        Ok(RatFunc { num: num.scale(&lc), den: den.scale(&lc) })
    }

    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::constant(c).into()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn into_poly(self) -> Option<Poly> {
        self.is_polynomial().then_some(self.num)
    }

    pub fn scale(&self, k: &Rational) -> RatFunc {
        if k.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: self.num.scale(k), den: self.den.clone() }
    }

    pub fn recip(&self) -> Result<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        Ok(self * &rhs.recip()?)
    }

    /// Value at `x`; errors at a pole.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }

    /// `f(q(x))` for a polynomial substitution.
    pub fn compose(&self, q: &Poly) -> Result<RatFunc> {
        RatFunc::new(self.num.compose(q), self.den.compose(q))
    }

    pub fn derivative(&self) -> RatFunc {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RatFunc::new(num, &self.den * &self.den).expect("nonzero denominator")
    }

    /// True when this is exactly the constant 1.
    pub fn is_one(&self) -> bool {
        self.den.is_constant() && self.num.degree() == Some(0) && self.num.coeff(0).is_one()
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).expect("monic den");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::new(num, &self.den * &rhs.den).expect("nonzero product of dens")
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            // Monic constant denominators are exactly 1.
            return RatFunc { num: &self.num * &rhs.num, den: Poly::one() };
        }
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero product of dens")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rint};

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn reduces_to_lowest_terms() {
        // (2x^2 - 2) / (2x - 2) = x + 1
        let r = RatFunc::new(p(&[-2, 0, 2]), p(&[-2, 2])).unwrap();
        assert_eq!(r, RatFunc::from(p(&[1, 1])));
        assert!(r.is_polynomial());
        let s = RatFunc::new(p(&[1]), p(&[2, 4])).unwrap();
        assert_eq!(s.den(), &Poly::new(vec![rat(1, 2), rint(1)]));
        assert_eq!(s.num(), &Poly::constant(rat(1, 4)));
    }

    #[test]
    fn equality_is_cross_multiplication() {
        let a = RatFunc::new(p(&[1, 1]), p(&[1, -1])).unwrap();
        let b = RatFunc::new(p(&[-3, -6, -3]), p(&[-3, 0, 3])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn arithmetic() {
        // tau = 1 - x / (1 + x/2) = (2 - x) / (2 + x)
        let w = RatFunc::new(Poly::x(), Poly::new(vec![rint(1), rat(1, 2)])).unwrap();
        let tau = &RatFunc::one() - &w;
        assert_eq!(tau, RatFunc::new(p(&[2, -1]), p(&[2, 1])).unwrap());
        assert_eq!(tau.eval(&rint(0)).unwrap(), rint(1));
        assert_eq!(&tau * &tau.recip().unwrap(), RatFunc::one());
        assert!(RatFunc::new(p(&[1]), Poly::zero()).is_err());
    }
}
