use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{factorial, gen_binom, rint, Poly, RatFunc, Rational};

/// Power series in `y` truncated after `y^order`, with rational-function
/// coefficients in `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesY {
    coeffs: Vec<RatFunc>,
}

impl SeriesY {
    /// Series from the listed coefficients, truncated or zero-padded to `order`.
    pub fn new(mut coeffs: Vec<RatFunc>, order: usize) -> Self {
        coeffs.resize(order + 1, RatFunc::zero());
        SeriesY { coeffs }
    }

    pub fn from_polys(coeffs: Vec<Poly>, order: usize) -> Self {
        SeriesY::new(coeffs.into_iter().map(RatFunc::from).collect(), order)
    }

    pub fn constant(c: RatFunc, order: usize) -> Self {
        SeriesY::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        SeriesY::constant(RatFunc::one(), order)
    }

    /// The series `y`.
    pub fn y(order: usize) -> Self {
        SeriesY::new(vec![RatFunc::zero(), RatFunc::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &RatFunc {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> SeriesY {
        SeriesY::new(self.coeffs[..=order.min(self.order())].to_vec(), order.min(self.order()))
    }

    pub fn scale(&self, k: &RatFunc) -> SeriesY {
        SeriesY { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    pub fn has_zero_constant(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    /// `(1 + u)^alpha` for `u` with zero constant term.
    pub fn binpow(u: &SeriesY, alpha: &Rational, order: usize) -> Result<SeriesY> {
        if !u.has_zero_constant() {
            return Err(Error::NonzeroConstantTerm);
        }
        let u = u.truncate(order);
        let k_max = u.order();
        let mut acc = SeriesY::one(k_max);
        let mut power = SeriesY::one(k_max);
        for k in 1..=k_max {
            power = &power * &u;
            let c = gen_binom(alpha, k as u32);
            if c.is_zero() {
                // Non-negative integer alpha: every later coefficient vanishes too.
                break;
            }
            acc = &acc + &power.scale(&RatFunc::constant(c));
        }
        Ok(acc)
    }

    /// `exp(u)` for `u` with zero constant term.
    pub fn exp(u: &SeriesY, order: usize) -> Result<SeriesY> {
        if !u.has_zero_constant() {
            return Err(Error::NonzeroConstantTerm);
        }
        let u = u.truncate(order);
        let k_max = u.order();
        let mut acc = SeriesY::one(k_max);
        let mut power = SeriesY::one(k_max);
        for k in 1..=k_max {
            power = &power * &u;
            let inv = Rational::from_integer(factorial(k as u32)).recip();
            acc = &acc + &power.scale(&RatFunc::constant(inv));
        }
        Ok(acc)
    }

    /// Substitutes `y -> -y`.
    pub fn negate_y(&self) -> SeriesY {
        SeriesY {
            coeffs: self.coeffs.iter().enumerate().map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() }).collect(),
        }
    }

    /// Substitutes `x -> q(x)` in every coefficient.
    pub fn compose_x(&self, q: &Poly) -> Result<SeriesY> {
        Ok(SeriesY { coeffs: self.coeffs.iter().map(|c| c.compose(q)).collect::<Result<_>>()? })
    }

    /// Substitutes `x -> x + h`.
    pub fn shift_x(&self, h: &Rational) -> Result<SeriesY> {
        self.compose_x(&Poly::linear(h.clone(), rint(1)))
    }

    /// Fixes `x = r`, leaving constant coefficients.
    pub fn eval_x(&self, r: &Rational) -> Result<SeriesY> {
        Ok(SeriesY { coeffs: self.coeffs.iter().map(|c| c.eval(r).map(RatFunc::constant)).collect::<Result<_>>()? })
    }

    /// Coefficient-wise `d/dx`.
    pub fn diff_x(&self) -> SeriesY {
        SeriesY { coeffs: self.coeffs.iter().map(RatFunc::derivative).collect() }
    }

    /// `d/dy`, losing one order.
    pub fn diff_y(&self) -> SeriesY {
        let order = self.order().saturating_sub(1);
        let coeffs = (1..=self.order()).map(|k| self.coeffs[k].scale(&rint(k as i64))).collect();
        SeriesY::new(coeffs, order)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RatFunc::is_zero)
    }

    /// Lowest power with a nonzero coefficient.
    pub fn first_nonzero(&self) -> Option<(usize, &RatFunc)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    /// `nu! * [y^nu]` for every `nu`, each of which must be a polynomial.
    pub fn to_cps(&self) -> Result<Vec<Poly>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let p =
                    c.as_poly().ok_or_else(|| Error::NonPolynomialCoefficient { power: k, value: c.to_string() })?;
                Ok(p.scale(&Rational::from_integer(factorial(k as u32))))
            })
            .collect()
    }

    /// Builds `sum y^nu / nu! * P_nu`.
    pub fn from_cps(cps: &[Poly], order: usize) -> SeriesY {
        SeriesY::new(
            cps.iter()
                .enumerate()
                .map(|(k, p)| RatFunc::from(p.scale(&Rational::from_integer(factorial(k as u32)).recip())))
                .collect(),
            order,
        )
    }
}

impl<'a> Add<&'a SeriesY> for &'a SeriesY {
    type Output = SeriesY;
    fn add(self, rhs: &SeriesY) -> SeriesY {
        let order = self.order().min(rhs.order());
        SeriesY { coeffs: (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect() }
    }
}

impl<'a> Sub<&'a SeriesY> for &'a SeriesY {
    type Output = SeriesY;
    fn sub(self, rhs: &SeriesY) -> SeriesY {
        self + &(-rhs)
    }
}

impl Neg for &SeriesY {
    type Output = SeriesY;
    fn neg(self) -> SeriesY {
        SeriesY { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl<'a> Mul<&'a SeriesY> for &'a SeriesY {
    type Output = SeriesY;
    fn mul(self, rhs: &SeriesY) -> SeriesY {
        let order = self.order().min(rhs.order());
        let mut out = vec![RatFunc::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        SeriesY { coeffs: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn consts(series: &SeriesY) -> Vec<Rational> {
        series.coeffs().iter().map(|c| c.as_poly().unwrap().coeff(0)).collect()
    }

    #[test]
    fn binpow_examples() {
        let y = SeriesY::y(5);
        assert_eq!(consts(&SeriesY::binpow(&y, &rat(1, 2), 2).unwrap()), vec![rint(1), rat(1, 2), rat(-1, 8)]);
        assert_eq!(consts(&SeriesY::binpow(&y, &rint(-2), 2).unwrap()), vec![rint(1), rint(-2), rint(3)]);
        assert_eq!(
            consts(&SeriesY::binpow(&y, &rint(3), 5).unwrap()),
            vec![rint(1), rint(3), rint(3), rint(1), rint(0), rint(0)]
        );
        assert_eq!(SeriesY::binpow(&SeriesY::one(3), &rint(2), 3), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn exp_examples() {
        let u = SeriesY::new(vec![RatFunc::zero(), RatFunc::from(Poly::from_ints(&[0, -1]))], 2);
        let e = SeriesY::exp(&u, 2).unwrap();
        assert_eq!(e.coeff(1), &RatFunc::from(Poly::from_ints(&[0, -1])));
        assert_eq!(e.coeff(2), &RatFunc::from(Poly::monomial(rat(1, 2), 2)));
        assert_eq!(SeriesY::exp(&SeriesY::new(vec![], 3), 3).unwrap(), SeriesY::one(3));
        let y2 = &SeriesY::y(3) * &SeriesY::y(3);
        assert_eq!(consts(&SeriesY::exp(&y2, 3).unwrap()), vec![rint(1), rint(0), rint(1), rint(0)]);
        assert_eq!(SeriesY::exp(&SeriesY::one(1), 1), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn mixed_orders_truncate_to_smaller() {
        let a = SeriesY::y(4);
        let b = SeriesY::one(2);
        assert_eq!((&a + &b).order(), 2);
        assert_eq!((&a * &b).order(), 2);
    }

    #[test]
    fn derivatives() {
        // e^{-xy}: d/dx = -y e^{-xy}, d/dy = -x e^{-xy}
        let u = SeriesY::new(vec![RatFunc::zero(), RatFunc::from(Poly::from_ints(&[0, -1]))], 4);
        let e = SeriesY::exp(&u, 4).unwrap();
        let minus_y = SeriesY::new(vec![RatFunc::zero(), RatFunc::constant(rint(-1))], 4);
        assert!((&e.diff_x() - &(&minus_y * &e)).is_zero());
        let minus_x = SeriesY::constant(RatFunc::from(Poly::from_ints(&[0, -1])), 3);
        assert!((&e.diff_y() - &(&minus_x * &e)).is_zero());
        assert_eq!(e.diff_y().order(), 3);
        assert_eq!(minus_y.first_nonzero().map(|(k, _)| k), Some(1));
    }

    #[test]
    fn cps_roundtrip() {
        let cps = vec![Poly::one(), Poly::from_ints(&[0, -4]), Poly::from_ints(&[-4, 0, 12])];
        assert_eq!(SeriesY::from_cps(&cps, 2).to_cps().unwrap(), cps);
    }
}
