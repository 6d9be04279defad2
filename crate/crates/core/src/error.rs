use thiserror::Error;

/// Errors raised by the algebra, enumeration and verification layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("zero denominator at position {pos}")]
    ZeroDenominator { pos: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),

    #[error("indeterminate name collision: {0}")]
    NameCollision(String),

    #[error("matrices {0} and {1} do not commute")]
    NotCommuting(String, String),

    #[error("constraint violated: {0}")]
    ConstraintViolated(String),

    #[error("invalid object: {0}")]
    InvalidObject(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for failures of a family's hypotheses (commutation or linear constraint).
    pub fn is_hypothesis_violation(&self) -> bool {
        matches!(self, Error::NotCommuting(..) | Error::ConstraintViolated(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
