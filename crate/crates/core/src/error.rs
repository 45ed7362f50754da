//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero in field")]
    DivisionByZero,

    #[error("no solution")]
    NoSolution,

    #[error("duplicate evaluation points")]
    DuplicatePoints,

    #[error("corrupt shares")]
    CorruptShares,

    #[error(
        "secrecy impossible: eavesdropped repair count must be below the smallest recovery level"
    )]
    SecrecyImpossible,

    #[error("insufficient shares: {0}")]
    InsufficientShares(String),

    #[error("unknown variable: {0}")]
    UnknownVariable(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("malformed share record: {0}")]
    MalformedRecord(String),
}

pub type Result<T> = std::result::Result<T, Error>;
