use thiserror::Error;

/// Errors raised by the library.
///
/// `Invalid*`, `SizeMismatch`, `BoundExceeded` and `NotApplicable` are caller
/// errors. `Internal` means an exactness or consistency assertion failed and
/// indicates a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid Frobenius coordinates: {0}")]
    InvalidFrobenius(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid label: {0}")]
    InvalidLabel(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("{what} requires n <= {bound}, got {n}")]
    BoundExceeded {
        what: &'static str,
        n: usize,
        bound: usize,
    },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
