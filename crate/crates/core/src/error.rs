use thiserror::Error;

/// Errors raised by the geometry, the evaluators and the optimizer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GboError {
    #[error("invalid search domain: {0}")]
    InvalidDomain(String),

    #[error("invalid granular ball: {0}")]
    InvalidBall(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("objective returned non-finite value {value} at {point:?}")]
    NonFiniteValue { point: Vec<f64>, value: f64 },

    #[error("evaluation budget of {0} distinct points exhausted")]
    EvaluationBudget(u64),

    #[error("unknown function '{0}' (valid ids: f1, f2, f3, f4, f5, f6, f7, f8, f9, f10, f11, f12, f13, f14, f15, f16, f17, f18, f19, f20)")]
    UnknownFunction(String),

    #[error("function {id} does not accept dimension {dimension}: {reason}")]
    IllegalDimension {
        id: String,
        dimension: usize,
        reason: String,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("oracle unavailable: {0}")]
    OracleUnavailable(String),
}

pub type Result<T, E = GboError> = std::result::Result<T, E>;
