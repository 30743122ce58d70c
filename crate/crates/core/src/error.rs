use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("invalid ordered set partition of [{d}]: {reason}")]
    InvalidPartition { d: usize, reason: String },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("dimension {d} outside supported range {min}..={max}")]
    UnsupportedDimension { d: usize, min: usize, max: usize },

    #[error("polytope is not placed: its perpendicular space misses the open fundamental chamber")]
    NotPlaced,

    #[error("polytope is not appropriate: vertex {vertex} does not have strictly increasing coordinates")]
    NotAppropriate { vertex: String },

    #[error("cone is not contained in the fundamental chamber")]
    NotInChamber,

    #[error("poset is not graded")]
    NotGraded,

    #[error("group action does not preserve the partial order")]
    ActionNotOrderPreserving,

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
