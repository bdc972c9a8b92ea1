use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("pole: denominator {denominator} vanishes at the evaluation point")]
    Pole { denominator: String },

    #[error("degenerate metric: determinant is identically zero")]
    DegenerateMetric,

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("resource cap exceeded: degree {degree} above cap {cap}")]
    Resource { degree: u32, cap: u32 },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("orthogonality violated: {0}")]
    NotOrthogonal(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("wrong dimension: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("not a hermitian pair: {0}")]
    NonHermitian(String),
}

pub type Result<T> = std::result::Result<T, Error>;
