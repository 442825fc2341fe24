use thiserror::Error;

use crate::lattice::MAX_UNIVERSE_SIZE;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("universe must have 1..={MAX_UNIVERSE_SIZE} elements, got {0}")]
    UniverseSize(usize),
    #[error("size guard exceeded: universe has {n} elements, guard allows {max_n}")]
    SizeGuard { n: usize, max_n: usize },
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("element names must be non-empty")]
    EmptyName,
    #[error("birth of `{0}` must be finite or -inf")]
    InvalidBirth(String),
    #[error("times must be a non-empty sorted list of distinct finite or +inf values")]
    InvalidTimes,
    #[error("width mismatch: expected {expected}, got {got}")]
    WidthMismatch { expected: usize, got: usize },
    #[error("dense table must have exactly {expected} entries, got {got}")]
    TableSize { expected: usize, got: usize },
    #[error("no stabilization after {applications} applications: the map is not monotone")]
    NoStabilization { applications: usize },
    #[error("iteration left the slice after {applications} applications")]
    EscapedSlice { applications: usize },
    #[error("invalid generator config: {0}")]
    InvalidConfig(String),
}
