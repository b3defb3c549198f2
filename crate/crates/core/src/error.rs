use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("lift infeasible: {0}")]
    LiftInfeasible(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("weight is not dominant: {0}")]
    NonDominantWeight(String),

    #[error("value is not integral: {0}")]
    NotIntegral(String),

    #[error("component at half-integer degree: {0}")]
    GradingParityViolation(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("point is not in the null cone: {0}")]
    NotInNullCone(String),

    #[error("degenerate sample after {0} attempts")]
    DegenerateSample(usize),

    #[error("element is not nilpotent")]
    NotNilpotent,

    #[error("kappa must be positive, got {0}")]
    NonPositiveKappa(String),

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("finite differences did not stabilize within {0} coefficients")]
    NotStabilized(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    #[error("parameters outside the stable range: {0}")]
    StableRange(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
