use thiserror::Error;

use crate::partition::Partition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts are not weakly decreasing: {0:?}")]
    NotAPartition(Vec<i64>),

    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("{label} is not a valid label for {group}")]
    LabelOutOfRange { label: Partition, group: String },

    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),

    #[error("matrix is not square")]
    NonSquare,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("division leaves a nonzero remainder")]
    InexactDivision,

    #[error("expected {expected} arguments, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("not in the span of the basis characters: {0}")]
    NotInSpan(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("integer overflow while converting a coefficient")]
    Overflow,

    #[error("internal error: {0}")]
    Internal(String),
}
