use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{rint, Poly, Rational};

/// Family identifiers, used for naming and dispatch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Legendre,
    Confluent,
    Hypergeometric,
    RelHermite,
    PreLaguerre,
    General,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Legendre,
        Family::Confluent,
        Family::Hypergeometric,
        Family::RelHermite,
        Family::PreLaguerre,
        Family::General,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Legendre => "legendre",
            Family::Confluent => "confluent",
            Family::Hypergeometric => "hypergeometric",
            Family::RelHermite => "relhermite",
            Family::PreLaguerre => "prelaguerre",
            Family::General => "general",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }

    pub fn routes(self) -> &'static [Route] {
        use Route::*;
        match self {
            Family::Legendre | Family::RelHermite => &[Rodrigues, GenFunc, Recursion],
            Family::Confluent | Family::Hypergeometric | Family::PreLaguerre => {
                &[Rodrigues, GenFunc, Recursion, Explicit]
            }
            Family::General => &[Rodrigues, GenFunc],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Construction routes for complementary polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Route {
    Rodrigues,
    GenFunc,
    Recursion,
    Explicit,
}

impl Route {
    pub const ALL: [Route; 4] = [Route::Rodrigues, Route::GenFunc, Route::Recursion, Route::Explicit];

    pub fn name(self) -> &'static str {
        match self {
            Route::Rodrigues => "rodrigues",
            Route::GenFunc => "genfunc",
            Route::Recursion => "recursion",
            Route::Explicit => "explicit",
        }
    }

    pub fn from_name(s: &str) -> Option<Route> {
        Route::ALL.into_iter().find(|r| r.name() == s)
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The two polynomial-weight frameworks that generalize the families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Framework {
    /// `P_nu = sigma^{nu-l} w^{N+nu} d^nu (sigma^l / w^N)`.
    Weighted { sigma: Poly, w: Poly, n: Rational },
    /// `P_nu = w^{nu-a-l} sigma^{nu-b-l} e^{-q} d^nu (w^{a+l} sigma^{b+l} e^q)`.
    HypergeometricType { w: Poly, sigma: Poly, a: Rational, b: Rational, exp_arg: Poly },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyParams {
    Legendre,
    Confluent { c: Rational },
    Hypergeometric { a: Rational, b: Rational, c: Rational },
    RelHermite { n: Rational },
    PreLaguerre { n: Rational },
    General(Framework),
}

/// A family with concrete parameters and degree index `l`.
///
/// For the relativistic Hermite family `l` plays no role and is kept at 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub params: FamilyParams,
    pub l: u32,
}

impl FamilySpec {
    pub fn legendre(l: u32) -> Self {
        FamilySpec { params: FamilyParams::Legendre, l }
    }

    pub fn confluent(c: Rational, l: u32) -> Self {
        FamilySpec { params: FamilyParams::Confluent { c }, l }
    }

    pub fn hypergeometric(a: Rational, b: Rational, c: Rational, l: u32) -> Self {
        FamilySpec { params: FamilyParams::Hypergeometric { a, b, c }, l }
    }

    pub fn rel_hermite(n: Rational) -> Result<Self> {
        positive(&n)?;
        Ok(FamilySpec { params: FamilyParams::RelHermite { n }, l: 0 })
    }

    pub fn pre_laguerre(n: Rational, l: u32) -> Result<Self> {
        positive(&n)?;
        Ok(FamilySpec { params: FamilyParams::PreLaguerre { n }, l })
    }

    pub fn general(framework: Framework, l: u32) -> Result<Self> {
        let polys = match &framework {
            Framework::Weighted { sigma, w, .. } => [sigma, w],
            Framework::HypergeometricType { w, sigma, .. } => [w, sigma],
        };
        if polys.iter().any(|p| p.is_zero()) {
            return Err(Error::Degenerate("sigma and w must be nonzero".into()));
        }
        Ok(FamilySpec { params: FamilyParams::General(framework), l })
    }

    pub fn family(&self) -> Family {
        match self.params {
            FamilyParams::Legendre => Family::Legendre,
            FamilyParams::Confluent { .. } => Family::Confluent,
            FamilyParams::Hypergeometric { .. } => Family::Hypergeometric,
            FamilyParams::RelHermite { .. } => Family::RelHermite,
            FamilyParams::PreLaguerre { .. } => Family::PreLaguerre,
            FamilyParams::General(_) => Family::General,
        }
    }

    /// Same parameters, different `l`.
    pub fn with_l(&self, l: u32) -> Self {
        FamilySpec { params: self.params.clone(), l }
    }

    /// Named rational parameters, in a fixed order.
    pub fn named_params(&self) -> Vec<(&'static str, Rational)> {
        match &self.params {
            FamilyParams::Legendre => vec![],
            FamilyParams::Confluent { c } => vec![("c", c.clone())],
            FamilyParams::Hypergeometric { a, b, c } => {
                vec![("a", a.clone()), ("b", b.clone()), ("c", c.clone())]
            }
            FamilyParams::RelHermite { n } | FamilyParams::PreLaguerre { n } => vec![("N", n.clone())],
            FamilyParams::General(Framework::Weighted { n, .. }) => vec![("N", n.clone())],
            FamilyParams::General(Framework::HypergeometricType { a, b, .. }) => {
                vec![("a", a.clone()), ("b", b.clone())]
            }
        }
    }

    /// Largest admissible `nu`, if capped. Legendre is defined for `nu <= l`.
    pub fn nu_cap(&self) -> Option<u32> {
        matches!(self.params, FamilyParams::Legendre).then_some(self.l)
    }

    pub fn l_rat(&self) -> Rational {
        rint(self.l as i64)
    }
}

fn positive(n: &Rational) -> Result<()> {
    if *n <= Rational::zero() {
        Err(Error::Degenerate(format!("N must be positive, got {n}")))
    } else {
        Ok(())
    }
}

/// Parameters `(A, B, C)` of the Gauss equation obeyed by `P_nu(x, l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamMap {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl ParamMap {
    /// `A = -nu`, `B = 2l - nu + a + b`, `C = l - nu + c`.
    pub fn new(a: &Rational, b: &Rational, c: &Rational, l: u32, nu: u32) -> Self {
        let (l, nu) = (rint(l as i64), rint(nu as i64));
        ParamMap { a: -nu.clone(), b: rint(2) * &l - &nu + a + b, c: l - nu + c }
    }
}
