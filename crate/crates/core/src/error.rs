//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, CoreError>;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid mapping: {0}")]
    InvalidMapping(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("inhomogeneous polynomial: monomials {0} and {1} disagree")]
    Inhomogeneous(String, String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("degree-map calibration failed: {0}")]
    Calibration(String),

    #[error("verification failed: {0}")]
    Verification(String),
}
