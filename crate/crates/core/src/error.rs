//! Error type shared by every module in the crate.

use thiserror::Error;

/// Everything that can go wrong outside of a plain "checked and failed"
/// verdict (those are reported through `ValidationReport`s, not errors).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or mismatched input: wrong shapes, out-of-range indices,
    /// missing operators, inconsistent orders.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A cochain degree beyond the supported cap was requested.
    #[error("degree {degree} exceeds the supported cap of {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },

    /// A cohomology dimension was requested of a complex whose differential
    /// does not square to zero; carries where and by how much it fails.
    #[error("complex invalid at degree {degree}: d\u{2218}d has rank {defect_rank}")]
    ComplexInvalid { degree: usize, defect_rank: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
