use thiserror::Error;

use crate::quantified::MoveError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("instance too large: {what} is {actual}, cap is {cap}")]
    TooLarge {
        what: &'static str,
        actual: usize,
        cap: usize,
    },

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("invalid formula: {0}")]
    InvalidFormula(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("illegal move: {0}")]
    IllegalMove(#[from] MoveError),

    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}
