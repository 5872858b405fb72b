use thiserror::Error;

use crate::funcmodel::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("expression uses `y` but the function has one variable")]
    ArityMismatch,

    #[error("operation needs a function of {expected} variable(s), got {found}")]
    WrongArity { expected: usize, found: usize },

    #[error("invalid interval [{lo}, {hi}]: endpoints must be finite with lo < hi")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("point {point:?} lies outside the function's domain")]
    OutsideDomain { point: Vec<f64> },

    #[error("value {value} at {point:?} is below the positivity floor {floor}")]
    NonPositive {
        point: Vec<f64>,
        value: f64,
        floor: f64,
    },

    #[error("non-finite value at {point:?}")]
    NonFinite { point: Vec<f64> },

    #[error("functions are defined on different domains")]
    DomainMismatch,

    #[error("r must be finite and non-negative, got {0}")]
    InvalidR(f64),

    #[error("{0} has no form for r = 0 (log-convex branch)")]
    GeometricBranchUnsupported(&'static str),

    #[error("exponents {r} and {s} are not Hölder conjugates with r > 1")]
    NotConjugate { r: f64, s: f64 },

    #[error("weight {0} lies outside [0, 1]")]
    WeightOutOfRange(f64),

    #[error("invalid weight vector: {0}")]
    InvalidWeights(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid quadrature config: {0}")]
    InvalidQuadrature(String),

    #[error("base function is not convex on the sampling grid (violation at {0})")]
    NotConvex(String),

    #[error("{0}")]
    Input(String),
}
