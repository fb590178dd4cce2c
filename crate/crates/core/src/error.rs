//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced anywhere in the toolkit.
///
/// Variants are grouped by the kind of failure so callers (notably the CLI)
/// can map them onto stable exit codes without matching on message text.
#[derive(Debug, Error)]
pub enum DplError {
    /// Tensor shapes do not conform for the requested operation.
    #[error("shape mismatch in {op}: {detail}")]
    ShapeMismatch { op: &'static str, detail: String },

    /// An operation was applied outside its mathematical domain
    /// (log/sqrt of a negative, division by zero, pow of a negative base).
    #[error("domain error in {op}: {detail}")]
    DomainError { op: &'static str, detail: String },

    /// A NaN or infinity was detected where finite values are required.
    #[error("non-finite value in {context}")]
    NonFinite { context: String },

    /// A numeric routine failed to behave (diverged, produced NaN loss, ...).
    #[error("numeric failure: {0}")]
    Numeric(String),

    /// Invalid configuration or argument values.
    #[error("invalid config: {0}")]
    Config(String),

    /// Input data is malformed, missing or inconsistent.
    #[error("data error: {0}")]
    Data(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl DplError {
    pub fn non_finite(context: impl Into<String>) -> Self {
        DplError::NonFinite {
            context: context.into(),
        }
    }

    pub fn config(msg: impl Into<String>) -> Self {
        DplError::Config(msg.into())
    }

    pub fn data(msg: impl Into<String>) -> Self {
        DplError::Data(msg.into())
    }
}
