//! Classical Legendre polynomials, their associated components and the
//! normalizations linking them to the complementary set.

use crate::error::{Error, Result};
use crate::exact::{binomial, double_fact, factorial, Poly, Rational};
use crate::symdiff::rodrigues_cp;

use super::rodrigues::classical_legendre_spec;

pub fn classical_legendre(l: u32) -> Result<Poly> {
    rodrigues_cp(&classical_legendre_spec(l)?, l)
}

/// `(-1)^m d^m P_l / dx^m`.
pub fn associated_component(l: u32, m: u32) -> Result<Poly> {
    let d = classical_legendre(l)?.nth_derivative(m as usize);
    Ok(if m % 2 == 1 { -&d } else { d })
}

/// Closed form valid when `l - m` is even; `m` may be `-1`.
fn norm_even(l: i64, m: i64) -> Result<Rational> {
    let lm = l - m;
    let half = u32::try_from(lm / 2).map_err(|_| Error::Degenerate(format!("m = {m} > l = {l}")))?;
    let k = Rational::from_integer(binomial(l as u32, half) * double_fact(lm)? * factorial(lm as u32))
        / Rational::from_integer(double_fact(l + m - 1)?);
    Ok(if m.rem_euclid(2) == 1 { -k } else { k })
}

/// `N_l^m` with `P_{l-m}(x, l) = N_l^m P_l^m(x)`.
pub fn legendre_norm(l: u32, m: u32) -> Result<Rational> {
    if m > l {
        return Err(Error::NuOutOfRange { nu: m, max: l });
    }
    let (l, m) = (l as i64, m as i64);
    if (l - m) % 2 == 0 {
        norm_even(l, m)
    } else {
        // N_l^{m} = N_l^{m-1} / ((l-m+1)(l+m))
        Ok(norm_even(l, m - 1)? / Rational::from_integer(((l - m + 1) * (l + m)).into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rint};

    #[test]
    fn norm_examples() {
        assert_eq!(legendre_norm(2, 0).unwrap(), rint(8));
        assert_eq!(legendre_norm(2, 1).unwrap(), rat(4, 3));
        assert_eq!(legendre_norm(1, 1).unwrap(), rint(-1));
        assert_eq!(legendre_norm(2, 2).unwrap(), rat(1, 3));
        assert_eq!(legendre_norm(1, 0).unwrap(), rint(-2));
        assert_eq!(legendre_norm(0, 0).unwrap(), rint(1));
        assert!(legendre_norm(1, 2).is_err());
    }

    #[test]
    fn classical_values() {
        assert_eq!(classical_legendre(2).unwrap(), Poly::new(vec![rat(-1, 2), rint(0), rat(3, 2)]));
        assert_eq!(associated_component(2, 1).unwrap(), Poly::from_ints(&[0, -3]));
        for l in 0..8 {
            assert_eq!(classical_legendre(l).unwrap().eval(&rint(1)), rint(1));
        }
    }
}
