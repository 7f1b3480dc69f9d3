//! Exact construction and verification of complementary polynomials.
//!
//! Five classical families (complementary Legendre, confluent and Gauss
//! hypergeometric, relativistic Hermite, pre-Laguerre) plus a general
//! `(sigma, w)` framework are built by up to four independent routes:
//! literal Rodrigues differentiation, closed-form generating-function
//! expansion, recursions, and explicit sums. The [`verify`] module turns every
//! identity into a named check over a parameter grid.

pub mod error;
pub mod exact;
pub mod families;
pub mod genfun;
pub mod symdiff;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{Poly, RatFunc, Rational};
pub use families::{cp, cp_all, Family, FamilyParams, FamilySpec, Framework, Route};
pub use verify::{run_suite, suite_passed, CheckClass, CheckId, CheckReport, GridConfig, Status};
