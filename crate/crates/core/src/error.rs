use thiserror::Error;

/// Errors surfaced by the counting engines and the arithmetic kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not divisible by x - 1")]
    NotDivisibleByXMinusOne,
    #[error("cannot invert a series whose constant term is zero")]
    NonInvertibleSeries,
    #[error("cannot divide by z: constant term {0} is nonzero")]
    NonzeroConstantTerm(String),
    #[error("paths end at different points: ({0},{1}) vs ({2},{3})")]
    EndpointMismatch(usize, usize, usize, usize),
    #[error("path is not weakly below the boundary")]
    NotBelow,
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid game specification: {0}")]
    InvalidGame(String),
    #[error("invalid ball set: {0}")]
    InvalidBallSet(String),
    #[error("resource cap exceeded: {0}")]
    CapExceeded(String),
    #[error("expected an integer coefficient, found {0}")]
    NonIntegerCoefficient(String),
    #[error("expected a nonnegative coefficient, found {0}")]
    NegativeCoefficient(String),
    #[error("generating function identity fails at z^{z_order}, coefficient x^{x_deg} y^{y_deg}")]
    IdentityMismatch {
        z_order: usize,
        x_deg: usize,
        y_deg: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
