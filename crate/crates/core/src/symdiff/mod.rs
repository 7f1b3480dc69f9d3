//! Symbolic differentiation over the class of finite sums
//! `m(x) * prod p_i(x)^e_i * exp(q(x))` with rational exponents.
//!
//! The class is closed under `d/dx`, which makes every Rodrigues formula
//! executable literally; [`rodrigues_cp`] is the ground-truth route the
//! faster constructions are checked against.

mod expr;
mod pearson;
mod rodrigues;

pub use expr::{FactoredExpr, FactoredTerm};
pub use pearson::{pearson_check, PearsonForm};
pub use rodrigues::{rodrigues_cp, rodrigues_cp_all, AffineExponent, RodriguesSpec};
