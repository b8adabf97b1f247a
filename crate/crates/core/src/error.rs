use thiserror::Error;

pub type Result<T> = std::result::Result<T, AlgebraError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("unit index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operation not defined for dimension {0}")]
    UnsupportedDimension(usize),

    #[error("non-finite scalar in {0}")]
    NonFinite(&'static str),

    #[error("singular parameters: sqrt(-D) vanishes (|sqrt(-D)| = {magnitude:e})")]
    SingularParameter { magnitude: f64 },

    #[error("pair/unit transform unsupported for dimension 16 with p != 0")]
    UnsupportedTransform,

    #[error("degenerate norm |N| = {magnitude:e}: zero divisor or nilpotent")]
    DegenerateNorm { magnitude: f64 },

    #[error("parameters must be real for this operation")]
    ComplexParameters,

    #[error("pole at even k: k = {k} lies within {tolerance:e} of an even integer")]
    PoleAtEvenK { k: f64, tolerance: f64 },

    #[error("inconsistent square root: {which}² does not reproduce {target}")]
    InconsistentRoot {
        which: &'static str,
        target: &'static str,
    },
}
