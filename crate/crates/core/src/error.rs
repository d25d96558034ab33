use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid dimension {got}: {reason}")]
    InvalidDimension { got: usize, reason: &'static str },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("invalid f-vector: {0}")]
    InvalidVector(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0} is not a member of the monoid")]
    NotAMember(String),

    #[error("fatness undefined: f0 + f3 - 10 = {0} is not positive")]
    UndefinedFatness(String),

    #[error("not a polytope: {0}")]
    NotAPolytope(String),

    #[error("operation not applicable: {0}")]
    NotApplicable(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("dataset error: {0}")]
    Dataset(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
