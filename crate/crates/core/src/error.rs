use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid Lie algebra structure: {0}")]
    InvalidStructure(String),

    #[error("invalid representation: {0}")]
    InvalidRep(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("arity mismatch: polynomial takes {expected} arguments, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("cutoff must be at least 1")]
    InvalidCutoff,

    #[error("truncated algebra dimension {dim} exceeds cap {cap} (set LIEPI_DIM_CAP to raise)")]
    DimensionCap { dim: usize, cap: usize },

    #[error("standard identity order {0} exceeds the supported cap of 8")]
    IdentityOrder(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("element is not in the nilpotent radical")]
    NotInNilRadical,

    #[error("numeric overflow: {0}")]
    Overflow(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
