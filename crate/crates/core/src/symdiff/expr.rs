use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{rint, Poly, RatFunc, Rational};

/// `c^e` for integer `e`; `None` for `0^negative`.
fn rat_pow(c: &Rational, e: &Rational) -> Option<Rational> {
    debug_assert!(e.is_integer());
    let k: i64 = i64::try_from(e.to_integer()).ok()?;
    if c.is_zero() && k < 0 {
        return None;
    }
    let base = if k < 0 { c.recip() } else { c.clone() };
    Some((0..k.unsigned_abs()).fold(Rational::one(), |acc, _| acc * &base))
}

/// Representative of `e` modulo the integers, in `[0, 1)`.
fn exponent_class(e: &Rational) -> Rational {
    e - e.floor()
}

fn nonneg_power(base: &Poly, k: &Rational) -> Poly {
    debug_assert!(k.is_integer() && !k.is_negative());
    base.pow(u32::try_from(k.to_integer()).expect("exponent fits in u32"))
}

/// One summand `multiplier * prod base^exponent * exp(exp_arg)`.
///
/// Bases are nonconstant, scaled so their lowest-order nonzero coefficient is
/// 1, sorted and distinct; zero exponents are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredTerm {
    multiplier: Poly,
    bases: Vec<(Poly, Rational)>,
    exp_arg: Poly,
}

impl FactoredTerm {
    pub fn new(multiplier: Poly, bases: impl IntoIterator<Item = (Poly, Rational)>, exp_arg: Poly) -> Result<Self> {
        let mut multiplier = multiplier;
        let mut merged: BTreeMap<Poly, Rational> = BTreeMap::new();
        for (base, e) in bases {
            if e.is_zero() {
                continue;
            }
            let Some(scale) = base.trailing().cloned() else {
                return Err(Error::Degenerate("zero base".into()));
            };
            let canon = base.scale(&scale.recip());
            if !scale.is_one() {
                if !e.is_integer() {
                    return Err(Error::Degenerate(format!("({base})^({e}) has no rational scale factor")));
                }
                let k = rat_pow(&scale, &e).ok_or_else(|| Error::Degenerate(format!("({base})^({e})")))?;
                multiplier = multiplier.scale(&k);
            }
            if canon.is_constant() {
                continue;
            }
            *merged.entry(canon).or_insert_with(Rational::zero) += e;
        }
        let bases = merged.into_iter().filter(|(_, e)| !e.is_zero()).collect();
        Ok(FactoredTerm { multiplier, bases, exp_arg })
    }

    pub fn poly(p: Poly) -> Self {
        FactoredTerm { multiplier: p, bases: Vec::new(), exp_arg: Poly::zero() }
    }

    pub fn multiplier(&self) -> &Poly {
        &self.multiplier
    }

    pub fn bases(&self) -> &[(Poly, Rational)] {
        &self.bases
    }

    pub fn exp_arg(&self) -> &Poly {
        &self.exp_arg
    }

    fn exponent_of(&self, base: &Poly) -> Rational {
        self.bases.iter().find(|(b, _)| b == base).map(|(_, e)| e.clone()).unwrap_or_else(Rational::zero)
    }

    fn set_exponent(&mut self, base: &Poly, e: Rational) {
        self.bases.retain(|(b, _)| b != base);
        if !e.is_zero() {
            self.bases.push((base.clone(), e));
            self.bases.sort_by(|a, b| a.0.cmp(&b.0));
        }
    }

    /// Product of two terms (bases merged by exponent addition).
    pub fn mul(&self, other: &FactoredTerm) -> FactoredTerm {
        let mut merged: BTreeMap<Poly, Rational> = self.bases.iter().cloned().collect();
        for (b, e) in &other.bases {
            *merged.entry(b.clone()).or_insert_with(Rational::zero) += e;
        }
        FactoredTerm {
            multiplier: &self.multiplier * &other.multiplier,
            bases: merged.into_iter().filter(|(_, e)| !e.is_zero()).collect(),
            exp_arg: &self.exp_arg + &other.exp_arg,
        }
    }

    fn with_multiplier(&self, multiplier: Poly) -> FactoredTerm {
        FactoredTerm { multiplier, bases: self.bases.clone(), exp_arg: self.exp_arg.clone() }
    }

    /// Product rule: at most `2 + bases` new terms.
    fn diff(&self) -> Vec<FactoredTerm> {
        let mut out = Vec::with_capacity(self.bases.len() + 2);
        out.push(self.with_multiplier(self.multiplier.derivative()));
        for (i, (base, e)) in self.bases.iter().enumerate() {
            let m = (&self.multiplier * &base.derivative()).scale(e);
            let mut t = self.with_multiplier(m);
            let lowered = e - Rational::one();
            if lowered.is_zero() {
                t.bases.remove(i);
            } else {
                t.bases[i].1 = lowered;
            }
            out.push(t);
        }
        if !self.exp_arg.is_zero() {
            out.push(self.with_multiplier(&self.multiplier * &self.exp_arg.derivative()));
        }
        out
    }
}

/// Finite sum of [`FactoredTerm`]s, kept in normalized form.
///
/// Normal form: for every base, the exponents of that base across terms whose
/// exponents differ by an integer (a missing base counts as exponent 0) are
/// aligned to the minimum, the difference moving into the multiplier; terms
/// with equal signatures are then merged and zero terms dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactoredExpr {
    terms: Vec<FactoredTerm>,
}

impl FactoredExpr {
    pub fn zero() -> Self {
        FactoredExpr { terms: Vec::new() }
    }

    pub fn from_terms(terms: Vec<FactoredTerm>) -> Self {
        FactoredExpr { terms }.normalize()
    }

    pub fn terms(&self) -> &[FactoredTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn normalize(self) -> Self {
        let mut terms: Vec<FactoredTerm> = self.terms.into_iter().filter(|t| !t.multiplier.is_zero()).collect();
        let mut all_bases: Vec<Poly> = terms.iter().flat_map(|t| t.bases.iter().map(|(b, _)| b.clone())).collect();
        all_bases.sort();
        all_bases.dedup();
        for base in &all_bases {
            let mut minima: BTreeMap<Rational, Rational> = BTreeMap::new();
            for t in &terms {
                let e = t.exponent_of(base);
                let class = exponent_class(&e);
                minima
                    .entry(class)
                    .and_modify(|m| {
                        if e < *m {
                            *m = e.clone()
                        }
                    })
                    .or_insert(e);
            }
            for t in &mut terms {
                let e = t.exponent_of(base);
                let m = &minima[&exponent_class(&e)];
                if e != *m {
                    let lift = nonneg_power(base, &(&e - m));
                    t.multiplier = &t.multiplier * &lift;
                    t.set_exponent(base, m.clone());
                }
            }
        }
        let mut merged: BTreeMap<(Vec<(Poly, Rational)>, Poly), Poly> = BTreeMap::new();
        for t in terms {
            let slot = merged.entry((t.bases, t.exp_arg)).or_insert_with(Poly::zero);
            *slot = &*slot + &t.multiplier;
        }
        FactoredExpr {
            terms: merged
                .into_iter()
                .filter(|(_, m)| !m.is_zero())
                .map(|((bases, exp_arg), multiplier)| FactoredTerm { multiplier, bases, exp_arg })
                .collect(),
        }
    }

    /// Formal derivative in normal form.
    pub fn diff(&self) -> FactoredExpr {
        FactoredExpr { terms: self.terms.iter().flat_map(FactoredTerm::diff).collect() }.normalize()
    }

    pub fn mul_term(&self, t: &FactoredTerm) -> FactoredExpr {
        FactoredExpr { terms: self.terms.iter().map(|s| s.mul(t)).collect() }.normalize()
    }

    pub fn scale(&self, k: &Rational) -> FactoredExpr {
        let p = Poly::constant(k.clone());
        self.mul_term(&FactoredTerm::poly(p))
    }

    /// The expression as a rational function; fails unless every term has
    /// integer exponents and no exponential factor.
    pub fn to_ratfunc(&self) -> Result<RatFunc> {
        let mut acc = RatFunc::zero();
        for t in &self.terms {
            if !t.exp_arg.is_zero() || t.bases.iter().any(|(_, e)| !e.is_integer()) {
                return Err(Error::NonPolynomialResidue(self.to_string()));
            }
            let mut num = t.multiplier.clone();
            let mut den = Poly::one();
            for (b, e) in &t.bases {
                if e.is_negative() {
                    den = &den * &nonneg_power(b, &-e);
                } else {
                    num = &num * &nonneg_power(b, e);
                }
            }
            acc = &acc + &RatFunc::new(num, den)?;
        }
        Ok(acc)
    }

    /// The expression as a polynomial, or a non-polynomial-residue error.
    pub fn to_poly(&self) -> Result<Poly> {
        self.to_ratfunc()?.into_poly().ok_or_else(|| Error::NonPolynomialResidue(self.to_string()))
    }
}

impl From<FactoredTerm> for FactoredExpr {
    fn from(t: FactoredTerm) -> Self {
        FactoredExpr { terms: vec![t] }.normalize()
    }
}

impl From<Poly> for FactoredExpr {
    fn from(p: Poly) -> Self {
        FactoredTerm::poly(p).into()
    }
}

impl Add for &FactoredExpr {
    type Output = FactoredExpr;
    fn add(self, rhs: &FactoredExpr) -> FactoredExpr {
        FactoredExpr { terms: self.terms.iter().chain(&rhs.terms).cloned().collect() }.normalize()
    }
}

impl Neg for &FactoredExpr {
    type Output = FactoredExpr;
    fn neg(self) -> FactoredExpr {
        self.scale(&rint(-1))
    }
}

impl Sub for &FactoredExpr {
    type Output = FactoredExpr;
    fn sub(self, rhs: &FactoredExpr) -> FactoredExpr {
        self + &(-rhs)
    }
}

impl fmt::Display for FactoredTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.multiplier)?;
        for (b, e) in &self.bases {
            write!(f, "*({b})^({e})")?;
        }
        if !self.exp_arg.is_zero() {
            write!(f, "*exp({})", self.exp_arg)?;
        }
        Ok(())
    }
}

impl fmt::Display for FactoredExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{t}")?;
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

    fn term(m: Poly, bases: Vec<(Poly, Rational)>, q: Poly) -> FactoredExpr {
        FactoredTerm::new(m, bases, q).unwrap().into()
    }

    #[test]
    fn diff_power_times_exp() {
        // d/dx x^{3/2} e^{-x} = (3/2) x^{1/2} e^{-x} - x^{3/2} e^{-x}
        let e = term(Poly::one(), vec![(Poly::x(), rat(3, 2))], p(&[0, -1]));
        let expected = &term(Poly::constant(rat(3, 2)), vec![(Poly::x(), rat(1, 2))], p(&[0, -1]))
            - &term(Poly::one(), vec![(Poly::x(), rat(3, 2))], p(&[0, -1]));
        assert!((&e.diff() - &expected).is_zero());
        // In normal form both summands share x^{1/2}.
        assert_eq!(e.diff().terms().len(), 1);
        assert_eq!(e.diff().terms()[0].multiplier(), &Poly::new(vec![rat(3, 2), rint(-1)]));
    }

    #[test]
    fn diff_chain_rule() {
        // d/dx (1 + x^2)^{-1} = -2x (1 + x^2)^{-2}
        let e = term(Poly::one(), vec![(p(&[1, 0, 1]), rint(-1))], Poly::zero());
        let expected = term(p(&[0, -2]), vec![(p(&[1, 0, 1]), rint(-2))], Poly::zero());
        assert_eq!(e.diff(), expected);
        // d/dx (1 - x^2)^3 = -6x (1 - x^2)^2
        let e = term(Poly::one(), vec![(p(&[1, 0, -1]), rint(3))], Poly::zero());
        let expected = term(p(&[0, -6]), vec![(p(&[1, 0, -1]), rint(2))], Poly::zero());
        assert!((&e.diff() - &expected).is_zero());
        assert_eq!(e.diff().to_poly().unwrap(), &p(&[0, -6]) * &p(&[1, 0, -1]).pow(2));
    }

    #[test]
    fn proportional_bases_merge() {
        // (2 + 2x)^2 * (1 + x)^{1/2} = 4 (1 + x)^{5/2}
        let t =
            FactoredTerm::new(Poly::one(), vec![(p(&[2, 2]), rint(2)), (p(&[1, 1]), rat(1, 2))], Poly::zero()).unwrap();
        assert_eq!(t.bases(), &[(p(&[1, 1]), rat(5, 2))]);
        assert_eq!(t.multiplier(), &Poly::constant(rint(4)));
        assert!(FactoredTerm::new(Poly::one(), vec![(p(&[2, 2]), rat(1, 2))], Poly::zero()).is_err());
    }

    #[test]
    fn alignment_and_residue() {
        // x^{-2} + 1 aligned to x^{-2}(1 + x^2)
        let e = &term(Poly::one(), vec![(Poly::x(), rint(-2))], Poly::zero()) + &FactoredExpr::from(Poly::one());
        assert_eq!(e.terms().len(), 1);
        assert_eq!(e.terms()[0].multiplier(), &p(&[1, 0, 1]));
        assert!(e.to_poly().is_err());
        let r = e.to_ratfunc().unwrap();
        assert_eq!(r, RatFunc::new(p(&[1, 0, 1]), p(&[0, 0, 1])).unwrap());
        let h = term(Poly::one(), vec![(Poly::x(), rat(1, 2))], Poly::zero());
        assert!(matches!(h.to_poly(), Err(Error::NonPolynomialResidue(_))));
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-6i64..6, 1i64..4).prop_map(|(n, d)| rat(n, d))
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec(small_rat(), 0..4).prop_map(Poly::new)
    }

    /// Expressions over two fixed bases with a shared exp argument.
    fn small_expr() -> impl Strategy<Value = FactoredExpr> {
        proptest::collection::vec((small_poly(), small_rat(), small_rat(), any::<bool>()), 1..4).prop_map(|parts| {
            let terms = parts
                .into_iter()
                .map(|(m, e1, e2, with_exp)| {
                    let q = if with_exp { p(&[0, -1]) } else { Poly::zero() };
                    FactoredTerm::new(m, vec![(Poly::x(), e1), (p(&[1, 1]), e2)], q).unwrap()
                })
                .collect();
            FactoredExpr::from_terms(terms)
        })
    }

    proptest! {
        #[test]
        fn diff_is_linear(a in small_expr(), b in small_expr()) {
            prop_assert!((&(&a + &b).diff() - &(&a.diff() + &b.diff())).is_zero());
        }

        #[test]
        fn diff_agrees_with_poly(q in small_poly()) {
            prop_assert_eq!(FactoredExpr::from(q.clone()).diff().to_poly().unwrap(), q.derivative());
        }

        #[test]
        fn normalize_idempotent(a in small_expr()) {
            prop_assert_eq!(a.clone().normalize(), a);
        }

        #[test]
        fn equality_stable_under_regrouping(m in small_poly(), e in small_rat(), k in 0u32..4) {
            // m * x^k * x^e  ==  (m x^k) * x^e split across two terms
            let lhs = FactoredExpr::from(FactoredTerm::new(m.clone(), vec![(Poly::x(), e.clone() + rint(k as i64))], Poly::zero()).unwrap());
            let rhs = FactoredExpr::from(FactoredTerm::new(&m * &Poly::x().pow(k), vec![(Poly::x(), e)], Poly::zero()).unwrap());
            prop_assert!((&lhs - &rhs).is_zero());
        }
    }
}
