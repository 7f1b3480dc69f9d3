//! Exact arithmetic: rationals, dense polynomials over them, rational
//! functions, and the combinatorial symbols the family formulas consume.

mod combinatorics;
mod poly;
mod ratfunc;
mod rational;

pub use combinatorics::{binomial, double_fact, factorial, gen_binom, pochhammer};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use rational::{parse_rational, rat, rint, Rational};
