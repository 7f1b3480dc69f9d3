use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{rint, Rational};
use crate::error::{Error, Result};

/// Generalized binomial coefficient `alpha (alpha-1) ... (alpha-k+1) / k!`.
pub fn gen_binom(alpha: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for j in 0..k {
        acc *= alpha - rint(j as i64);
        acc /= rint(j as i64 + 1);
    }
    acc
}

/// Rising factorial `(alpha)_k`.
pub fn pochhammer(alpha: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for j in 0..k {
        acc *= alpha + rint(j as i64);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    gen_binom(&rint(n as i64), k).to_integer()
}

/// `n!!` with `(-1)!! = 0!! = 1`.
pub fn double_fact(n: i64) -> Result<BigInt> {
    if n < -1 {
        return Err(Error::DoubleFactorial(n));
    }
    let mut acc = BigInt::one();
    let mut j = n;
    while j > 1 {
        acc *= BigInt::from(j);
        j -= 2;
    }
    Ok(acc)
}
