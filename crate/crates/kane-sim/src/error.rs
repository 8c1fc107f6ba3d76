//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input validation failed (bad arguments, out-of-range angles, unknown names).
    #[error("validation: {0}")]
    Validation(String),

    /// Device parameters are outside the regime where the model is trustworthy.
    #[error("physics validity: {0}")]
    Physics(String),

    /// A matrix failed a structural precondition (unitarity, hermiticity, dimension).
    #[error("matrix: {0}")]
    Matrix(String),

    /// Eigendecomposition failed to converge.
    #[error("eigendecomposition failed: {0}")]
    Eigen(String),

    /// Branch ambiguity in the canonical decomposition that cannot be resolved silently.
    #[error("ambiguous branch: {0}")]
    AmbiguousBranch(String),

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn physics(msg: impl Into<String>) -> Self {
        Error::Physics(msg.into())
    }

    pub fn matrix(msg: impl Into<String>) -> Self {
        Error::Matrix(msg.into())
    }
}
