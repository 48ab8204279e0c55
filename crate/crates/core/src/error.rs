use std::io;

use thiserror::Error;

/// Errors surfaced by every fallible operation in the crate.
#[derive(Debug, Error)]
pub enum KneserError {
    /// Arguments violate an operation's precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Input is not in the generic position an algorithm relies on.
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// The requested case is outside what the decision procedures cover.
    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("I/O error: {0}")]
    Io(#[from] io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),

    /// An internal invariant failed; always a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

impl KneserError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        KneserError::InvalidInput(msg.into())
    }

    pub fn degenerate(msg: impl Into<String>) -> Self {
        KneserError::DegenerateInput(msg.into())
    }

    /// True for the domain errors (as opposed to I/O or parse failures).
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            KneserError::InvalidInput(_)
                | KneserError::DegenerateInput(_)
                | KneserError::Unsupported(_)
                | KneserError::Internal(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, KneserError>;
