//! Closed-form generating functions, hand-written per family and produced
//! generically from the `(sigma, w)` frameworks via `X = x + y sigma w`.

use super::rodrigues::{one_minus_x, one_plus_x2_over, one_plus_x_over};
use super::spec::{FamilyParams, FamilySpec, Framework};
use crate::error::Result;
use crate::exact::{factorial, rint, Poly, RatFunc, Rational};
use crate::genfun::{ypoly, GfSpec, YPoly};

pub fn gf_spec(spec: &FamilySpec) -> Result<GfSpec> {
    let l = spec.l_rat();
    let one = Poly::one;
    Ok(match &spec.params {
        FamilyParams::Legendre => GfSpec::default()
            .factor(ypoly(vec![one(), Poly::from_ints(&[-1, -1])]), l.clone())
            .factor(ypoly(vec![one(), one_minus_x()]), l),
        FamilyParams::Confluent { c } => GfSpec::default()
            .factor(ypoly(vec![one(), one()]), c - rint(1) + &l)
            .with_exp(ypoly(vec![Poly::zero(), -Poly::x()])),
        FamilyParams::Hypergeometric { a, b, c } => GfSpec::default()
            .factor(ypoly(vec![one(), one_minus_x()]), &l + c - rint(1))
            .factor(ypoly(vec![one(), -Poly::x()]), &l + a + b - c),
        FamilyParams::RelHermite { n } => {
            // (1 - xy/N)^2 + y^2/N = 1 - 2x/N y + (x^2 + N)/N^2 y^2
            let n2 = n * n;
            GfSpec::default().factor(
                ypoly(vec![
                    one(),
                    Poly::monomial(rint(-2) / n, 1),
                    Poly::new(vec![n.recip(), Rational::from_integer(0.into()), n2.recip()]),
                ]),
                -n.clone(),
            )
        }
        FamilyParams::PreLaguerre { n } => GfSpec::default()
            .factor(ypoly(vec![one(), one_plus_x_over(n)]), l)
            .factor(ypoly(vec![one(), Poly::monomial(n.recip(), 1)]), -n.clone()),
        FamilyParams::General(fw) => framework_gf(fw, spec.l)?,
    })
}

/// `f(x + y s(x)) / f(x)` as a polynomial in `y`: coefficient `k` is
/// `f^{(k)} s^k / (k! f)`.
pub fn taylor_ratio(f: &Poly, s: &Poly) -> Result<YPoly> {
    let deg = f.degree().unwrap_or(0);
    let mut out = Vec::with_capacity(deg + 1);
    let mut fk = f.clone();
    for k in 0..=deg {
        let inv_k = Rational::from_integer(factorial(k as u32)).recip();
        out.push(RatFunc::new((&fk * &s.pow(k as u32)).scale(&inv_k), f.clone())?);
        fk = fk.derivative();
    }
    Ok(out)
}

/// `q(x + y s(x)) - q(x)` as a polynomial in `y`.
fn taylor_difference(q: &Poly, s: &Poly) -> YPoly {
    let deg = q.degree().unwrap_or(0);
    let mut out = vec![RatFunc::zero()];
    let mut qk = q.derivative();
    for k in 1..=deg {
        let inv_k = Rational::from_integer(factorial(k as u32)).recip();
        out.push(RatFunc::from((&qk * &s.pow(k as u32)).scale(&inv_k)));
        qk = qk.derivative();
    }
    out
}

pub fn framework_gf(fw: &Framework, l: u32) -> Result<GfSpec> {
    let l = rint(l as i64);
    Ok(match fw {
        Framework::Weighted { sigma, w, n } => {
            let s = sigma * w;
            GfSpec::default().factor(taylor_ratio(w, &s)?, -n.clone()).factor(taylor_ratio(sigma, &s)?, l)
        }
        Framework::HypergeometricType { w, sigma, a, b, exp_arg } => {
            let s = sigma * w;
            let mut gf =
                GfSpec::default().factor(taylor_ratio(w, &s)?, a + &l).factor(taylor_ratio(sigma, &s)?, b + &l);
            if !exp_arg.is_zero() {
                gf = gf.with_exp(taylor_difference(exp_arg, &s));
            }
            gf
        }
    })
}

/// The framework instance each family specializes, and whether the family
/// carries an extra `(-1)^nu` (equivalently `y -> -y`).
pub fn family_framework(spec: &FamilySpec) -> Option<(Framework, bool)> {
    let x = Poly::x();
    let zero = || Rational::from_integer(0.into());
    Some(match &spec.params {
        FamilyParams::Legendre => (
            Framework::HypergeometricType {
                w: Poly::from_ints(&[1, 1]),
                sigma: one_minus_x(),
                a: zero(),
                b: zero(),
                exp_arg: Poly::zero(),
            },
            false,
        ),
        FamilyParams::Confluent { c } => (
            Framework::HypergeometricType {
                w: x,
                sigma: Poly::one(),
                a: c - rint(1),
                b: zero(),
                exp_arg: Poly::from_ints(&[0, -1]),
            },
            false,
        ),
        FamilyParams::Hypergeometric { a, b, c } => (
            Framework::HypergeometricType {
                w: x,
                sigma: one_minus_x(),
                a: c - rint(1),
                b: a + b - c,
                exp_arg: Poly::zero(),
            },
            false,
        ),
        FamilyParams::RelHermite { n } => {
            (Framework::Weighted { sigma: Poly::one(), w: one_plus_x2_over(n), n: n.clone() }, true)
        }
        FamilyParams::PreLaguerre { n } => {
            (Framework::Weighted { sigma: x, w: one_plus_x_over(n), n: n.clone() }, false)
        }
        FamilyParams::General(_) => return None,
    })
}
