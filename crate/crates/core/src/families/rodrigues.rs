//! Literal Rodrigues formulas for each family.

use num_traits::One;

use super::spec::{FamilyParams, FamilySpec, Framework};
use crate::error::Result;
use crate::exact::{rat, rint, Poly, Rational};
use crate::symdiff::{AffineExponent, FactoredTerm, RodriguesSpec};

fn aff(constant: Rational) -> AffineExponent {
    AffineExponent::new(constant, Rational::one())
}

/// `1 + x/N`
pub(crate) fn one_plus_x_over(n: &Rational) -> Poly {
    Poly::linear(Rational::one(), n.recip())
}

/// `1 + x^2/N`
pub(crate) fn one_plus_x2_over(n: &Rational) -> Poly {
    Poly::new(vec![Rational::one(), Rational::from_integer(0.into()), n.recip()])
}

pub(crate) fn one_minus_x() -> Poly {
    Poly::from_ints(&[1, -1])
}

pub fn rodrigues_spec(spec: &FamilySpec) -> Result<RodriguesSpec> {
    let l = spec.l_rat();
    let x = Poly::x();
    let none = Poly::zero;
    Ok(match &spec.params {
        FamilyParams::Legendre => {
            let s = Poly::from_ints(&[1, 0, -1]);
            RodriguesSpec {
                inner: FactoredTerm::new(Poly::one(), vec![(s.clone(), l.clone())], none())?,
                prefactor: vec![(s, aff(-l))],
                ..Default::default()
            }
        }
        FamilyParams::Confluent { c } => {
            let e = c - rint(1) + &l;
            RodriguesSpec {
                inner: FactoredTerm::new(Poly::one(), vec![(x.clone(), e.clone())], Poly::from_ints(&[0, -1]))?,
                prefactor: vec![(x.clone(), aff(-e))],
                prefactor_exp: x,
                ..Default::default()
            }
        }
        FamilyParams::Hypergeometric { a, b, c } => {
            let ex = c - rint(1) + &l;
            let e1 = &l + a + b - c;
            RodriguesSpec {
                inner: FactoredTerm::new(
                    Poly::one(),
                    vec![(x.clone(), ex.clone()), (one_minus_x(), e1.clone())],
                    none(),
                )?,
                prefactor: vec![(x, aff(-ex)), (one_minus_x(), aff(-e1))],
                ..Default::default()
            }
        }
        FamilyParams::RelHermite { n } => {
            let w = one_plus_x2_over(n);
            RodriguesSpec {
                inner: FactoredTerm::new(Poly::one(), vec![(w.clone(), -n.clone())], none())?,
                prefactor: vec![(w, aff(n.clone()))],
                alternating: true,
                ..Default::default()
            }
        }
        FamilyParams::PreLaguerre { n } => {
            let w = one_plus_x_over(n);
            RodriguesSpec {
                inner: FactoredTerm::new(Poly::one(), vec![(x.clone(), l.clone()), (w.clone(), -n.clone())], none())?,
                prefactor: vec![(x, aff(-l)), (w, aff(n.clone()))],
                ..Default::default()
            }
        }
        FamilyParams::General(fw) => framework_rodrigues(fw, spec.l)?,
    })
}

pub fn framework_rodrigues(fw: &Framework, l: u32) -> Result<RodriguesSpec> {
    let l = rint(l as i64);
    Ok(match fw {
        Framework::Weighted { sigma, w, n } => RodriguesSpec {
            inner: FactoredTerm::new(
                Poly::one(),
                vec![(sigma.clone(), l.clone()), (w.clone(), -n.clone())],
                Poly::zero(),
            )?,
            prefactor: vec![(sigma.clone(), aff(-l)), (w.clone(), aff(n.clone()))],
            ..Default::default()
        },
        Framework::HypergeometricType { w, sigma, a, b, exp_arg } => {
            let (ew, es) = (a + &l, b + &l);
            RodriguesSpec {
                inner: FactoredTerm::new(
                    Poly::one(),
                    vec![(w.clone(), ew.clone()), (sigma.clone(), es.clone())],
                    exp_arg.clone(),
                )?,
                prefactor: vec![(w.clone(), aff(-ew)), (sigma.clone(), aff(-es))],
                prefactor_exp: -exp_arg,
                ..Default::default()
            }
        }
    })
}

/// The complementary set of the hypergeometric-type framework with the
/// prefactor `w^{nu-a} sigma^{nu-b}` (no `l` shift), kept for diagnostics.
pub fn framework_rodrigues_unshifted(
    w: &Poly,
    sigma: &Poly,
    a: &Rational,
    b: &Rational,
    l: u32,
) -> Result<RodriguesSpec> {
    let l = rint(l as i64);
    Ok(RodriguesSpec {
        inner: FactoredTerm::new(Poly::one(), vec![(w.clone(), a + &l), (sigma.clone(), b + &l)], Poly::zero())?,
        prefactor: vec![(w.clone(), aff(-a.clone())), (sigma.clone(), aff(-b.clone()))],
        ..Default::default()
    })
}

/// Classical Legendre `P_l = (-1)^l / (2^l l!) d^l (1-x^2)^l`.
pub fn classical_legendre_spec(l: u32) -> Result<RodriguesSpec> {
    let s = Poly::from_ints(&[1, 0, -1]);
    let mut scale = Rational::one();
    for j in 1..=l as i64 {
        scale *= rat(1, 2 * j);
    }
    if l % 2 == 1 {
        scale = -scale;
    }
    Ok(RodriguesSpec {
        inner: FactoredTerm::new(Poly::one(), vec![(s, rint(l as i64))], Poly::zero())?,
        scale,
        ..Default::default()
    })
}

/// Relativistic Hermite through the recursive definition: `H_n` from `H_nu`
/// by `(-1)^{n-nu} (1+x^2/N)^{N+n} d^{n-nu} [H_nu (1+x^2/N)^{-N-nu}]`.
pub fn rel_hermite_lift_spec(n: &Rational, h_nu: &Poly, nu: u32) -> Result<RodriguesSpec> {
    let w = one_plus_x2_over(n);
    let nu_r = rint(nu as i64);
    Ok(RodriguesSpec {
        inner: FactoredTerm::new(h_nu.clone(), vec![(w.clone(), -(n + &nu_r))], Poly::zero())?,
        prefactor: vec![(w, AffineExponent::new(n + &nu_r, Rational::one()))],
        alternating: true,
        ..Default::default()
    })
}

/// `P_nu = x^{nu-l} (1+x/N)^{N+nu} d^{nu-mu} [x^{l-mu} P_mu (1+x/N)^{-N-mu}]`,
/// parameterized by the derivative count `nu - mu`. At `nu = l` this is the
/// recursive definition of the pre-Laguerre polynomial from `P_mu`.
pub fn pre_laguerre_lift_spec(n: &Rational, l: u32, p_mu: &Poly, mu: u32) -> Result<RodriguesSpec> {
    let w = one_plus_x_over(n);
    let (l_r, mu_r) = (rint(l as i64), rint(mu as i64));
    Ok(RodriguesSpec {
        inner: FactoredTerm::new(
            p_mu.clone(),
            vec![(Poly::x(), &l_r - &mu_r), (w.clone(), -(n + &mu_r))],
            Poly::zero(),
        )?,
        prefactor: vec![
            (Poly::x(), AffineExponent::new(&mu_r - &l_r, Rational::one())),
            (w, AffineExponent::new(n + &mu_r, Rational::one())),
        ],
        ..Default::default()
    })
}

/// `(-1)^l 2^l l! P_l = d^{l-nu} [(1-x^2)^{l-nu} P_nu]`, parameterized by the
/// derivative count `l - nu`.
pub fn legendre_lift_spec(l: u32, p_nu: &Poly, nu: u32) -> Result<RodriguesSpec> {
    let s = Poly::from_ints(&[1, 0, -1]);
    Ok(RodriguesSpec {
        inner: FactoredTerm::new(p_nu.clone(), vec![(s, rint(l as i64 - nu as i64))], Poly::zero())?,
        ..Default::default()
    })
}
