use super::expr::{FactoredExpr, FactoredTerm};
use crate::error::Result;
use crate::exact::{Poly, RatFunc};

/// Which side the rational coefficient sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PearsonForm {
    /// `sigma w' = rhs w`
    WeightDerivative,
    /// `(sigma w)' = rhs w`
    Flux,
}

/// Decides the Pearson equation for weight `w` by normalizing
/// `den * lhs - num * w` to zero, with `rhs = num / den`.
pub fn pearson_check(sigma: &Poly, w: &FactoredTerm, rhs: &RatFunc, form: PearsonForm) -> Result<bool> {
    let w = FactoredExpr::from(w.clone());
    let lhs = match form {
        PearsonForm::WeightDerivative => w.diff().mul_term(&FactoredTerm::poly(sigma.clone())),
        PearsonForm::Flux => w.mul_term(&FactoredTerm::poly(sigma.clone())).diff(),
    };
    let residual =
        &lhs.mul_term(&FactoredTerm::poly(rhs.den().clone())) - &w.mul_term(&FactoredTerm::poly(rhs.num().clone()));
    Ok(residual.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rint};

    #[test]
    fn confluent_weight() {
        // x w' = (c - 1 - x) w, w = x^{c-1} e^{-x}, c = 1/2
        let c = rat(1, 2);
        let w = FactoredTerm::new(Poly::one(), vec![(Poly::x(), &c - rint(1))], Poly::from_ints(&[0, -1])).unwrap();
        let rhs = RatFunc::from(Poly::linear(&c - rint(1), rint(-1)));
        assert!(pearson_check(&Poly::x(), &w, &rhs, PearsonForm::WeightDerivative).unwrap());
        let perturbed = RatFunc::from(Poly::linear(c, rint(-1)));
        assert!(!pearson_check(&Poly::x(), &w, &perturbed, PearsonForm::WeightDerivative).unwrap());
    }

    #[test]
    fn prelaguerre_weight() {
        // (x w)' = (1 - x/(1 + x/2)) w, w = (1 + x/2)^{-2}
        let base = Poly::new(vec![rint(1), rat(1, 2)]);
        let w = FactoredTerm::new(Poly::one(), vec![(base.clone(), rint(-2))], Poly::zero()).unwrap();
        let tau = &RatFunc::one() - &RatFunc::new(Poly::x(), base).unwrap();
        assert!(pearson_check(&Poly::x(), &w, &tau, PearsonForm::Flux).unwrap());
        assert!(!pearson_check(&Poly::x(), &w, &tau, PearsonForm::WeightDerivative).unwrap());
    }
}
