//! Truncated power series in `y` and closed-form generating functions.
//!
//! A generating function `sum y^nu / nu! * P_nu(x)` is expanded to a fixed
//! order and each `P_nu` recovered as `nu!` times its coefficient.

mod series;
mod spec;

pub use series::SeriesY;
pub use spec::{expand_gf, ypoly, GfFactor, GfSpec, YKey, YPoly};
