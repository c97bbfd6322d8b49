//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SuperweylError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("shape mismatch: ({m1}|{n1}) vs ({m2}|{n2})")]
    ShapeMismatch {
        m1: usize,
        n1: usize,
        m2: usize,
        n2: usize,
    },
    #[error("unknown field name: {0}")]
    UnknownField(String),
    #[error("invalid field index: {0}")]
    InvalidIndex(String),
    #[error("unrecognized basis element: {0}")]
    UnknownBasisElement(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}
