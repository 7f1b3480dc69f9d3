use thiserror::Error;

/// Errors raised anywhere in the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    /// Exact polynomial division left a remainder.
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
    #[error("double factorial undefined for {0}")]
    DoubleFactorial(i64),
    /// A Rodrigues expression did not reduce to a polynomial.
    #[error("non-polynomial residue: {0}")]
    NonPolynomialResidue(String),
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("series argument has nonzero constant term")]
    NonzeroConstantTerm,
    #[error("non-polynomial GF coefficient at y^{power}: {value}")]
    NonPolynomialCoefficient { power: usize, value: String },
    #[error("route {route} is not available for family {family}")]
    UnavailableRoute { family: String, route: String },
    #[error("missing parameter {0}")]
    MissingParameter(String),
    #[error("index nu={nu} out of range (max {max})")]
    NuOutOfRange { nu: u32, max: u32 },
    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
