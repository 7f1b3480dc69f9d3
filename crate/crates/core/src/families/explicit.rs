//! Finite binomial sums.

use super::rodrigues::one_plus_x_over;
use super::spec::{FamilyParams, FamilySpec};
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, gen_binom, rint, Poly, Rational};

fn fact(n: u32) -> Rational {
    Rational::from_integer(factorial(n))
}

pub fn explicit_cp(spec: &FamilySpec, nu: u32) -> Result<Poly> {
    let l = spec.l_rat();
    let minus_x = Poly::from_ints(&[0, -1]);
    match &spec.params {
        FamilyParams::Confluent { c } => {
            // sum_mu C(c-1+l, nu-mu) nu!/mu! (-x)^mu
            let alpha = c - rint(1) + &l;
            Ok((0..=nu).fold(Poly::zero(), |acc, mu| {
                let k = gen_binom(&alpha, nu - mu) * fact(nu) / fact(mu);
                &acc + &minus_x.pow(mu).scale(&k)
            }))
        }
        FamilyParams::Hypergeometric { a, b, c } => {
            // nu! sum_lambda C(l+a+b-c, lambda) C(l+c-1, nu-lambda) (1-x)^{nu-lambda} (-x)^lambda
            let (alpha, beta) = (&l + a + b - c, &l + c - rint(1));
            let one_minus_x = Poly::from_ints(&[1, -1]);
            Ok((0..=nu).fold(Poly::zero(), |acc, lam| {
                let k = gen_binom(&alpha, lam) * gen_binom(&beta, nu - lam) * fact(nu);
                &acc + &(&one_minus_x.pow(nu - lam) * &minus_x.pow(lam)).scale(&k)
            }))
        }
        FamilyParams::PreLaguerre { n } => {
            // nu! sum_{mu <= min(l, nu)} C(l, mu) C(-N, nu-mu) (x/N)^{nu-mu} (1+x/N)^mu
            let x_over_n = Poly::monomial(n.recip(), 1);
            let w = one_plus_x_over(n);
            Ok((0..=spec.l.min(nu)).fold(Poly::zero(), |acc, mu| {
                let k = Rational::from_integer(binomial(spec.l, mu)) * gen_binom(&-n.clone(), nu - mu) * fact(nu);
                &acc + &(&x_over_n.pow(nu - mu) * &w.pow(mu)).scale(&k)
            }))
        }
        _ => Err(Error::UnavailableRoute { family: spec.family().name().into(), route: "explicit".into() }),
    }
}
