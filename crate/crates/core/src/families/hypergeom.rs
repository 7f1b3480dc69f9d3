//! Terminating Kummer and Gauss series used as reference polynomials.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{factorial, pochhammer, rint, Poly, Rational};

fn terminating(nu: u32, upper: &[&Rational], lower: &Rational) -> Result<Poly> {
    let minus_nu = rint(-(nu as i64));
    let mut coeffs = Vec::with_capacity(nu as usize + 1);
    for k in 0..=nu {
        let den = pochhammer(lower, k);
        if den.is_zero() {
            return Err(Error::Degenerate(format!("denominator degeneracy: ({lower})_{k} = 0")));
        }
        let num = upper.iter().fold(pochhammer(&minus_nu, k), |acc, b| acc * pochhammer(b, k));
        coeffs.push(num / (den * Rational::from_integer(factorial(k))));
    }
    Ok(Poly::new(coeffs))
}

/// `M(-nu, C, x)`.
pub fn kummer_poly(nu: u32, c: &Rational) -> Result<Poly> {
    terminating(nu, &[], c)
}

/// `F(-nu, B; C; x)`.
pub fn gauss_poly(nu: u32, b: &Rational, c: &Rational) -> Result<Poly> {
    terminating(nu, &[b], c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn kummer_examples() {
        assert_eq!(kummer_poly(2, &rint(1)).unwrap(), Poly::new(vec![rint(1), rint(-2), rat(1, 2)]));
        assert_eq!(kummer_poly(0, &rat(2, 7)).unwrap(), Poly::one());
        let c = rat(5, 3);
        assert_eq!(kummer_poly(1, &c).unwrap(), Poly::linear(rint(1), -c.recip()));
        assert!(matches!(kummer_poly(3, &rint(-1)), Err(Error::Degenerate(_))));
    }

    #[test]
    fn gauss_examples() {
        assert_eq!(gauss_poly(2, &rint(2), &rat(1, 2)).unwrap(), Poly::from_ints(&[1, -8, 8]));
        assert_eq!(gauss_poly(0, &rint(3), &rint(4)).unwrap(), Poly::one());
        let (b, c) = (rat(3, 2), rat(7, 4));
        assert_eq!(gauss_poly(1, &b, &c).unwrap(), Poly::linear(rint(1), -&b / &c));
        assert!(gauss_poly(2, &rint(1), &rint(0)).is_err());
    }
}
