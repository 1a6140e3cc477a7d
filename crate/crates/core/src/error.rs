use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input is empty")]
    EmptyInput,
    #[error("negative value {value} at position {position}")]
    NegativeValue { position: usize, value: i64 },
    #[error("arithmetic overflow: {0}")]
    Overflow(&'static str),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("invalid length {0} (must be 1..=64)")]
    InvalidLength(usize),
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("operator undefined: {0}")]
    OperatorUndefined(String),
    #[error("{vector} is not an element of {kind}")]
    NotInPoset { vector: String, kind: String },
    #[error("n = {n} exceeds the limit {limit} for {what}")]
    TooLarge { what: &'static str, n: u64, limit: u64 },
    #[error("n = {n} is below the minimum {min} for {what}")]
    TooSmall { what: &'static str, n: usize, min: usize },
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("operation not defined for poset {0}")]
    UnsupportedKind(String),
    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),
}

pub type Result<T> = std::result::Result<T, Error>;
