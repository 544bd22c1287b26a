use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("unknown space `{0}` (expected s3xs3, cp3 or flag)")]
    UnknownSpace(String),
    #[error("invalid label {label} for {group}: {reason}")]
    InvalidLabel {
        group: String,
        label: String,
        reason: String,
    },
    #[error("no explicit representation matrices for {0}")]
    UnsupportedLabel(String),
    #[error("negative multiplicity while subtracting {0}")]
    NegativeMultiplicity(String),
    #[error("subgroup mismatch: {0} vs {1}")]
    SubgroupMismatch(String, String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),
    #[error("operator is not a scalar multiple of the identity")]
    NotScalar,
    #[error("coefficients must sum to zero, got {0}")]
    NotTraceFree(String),
    #[error("weights outside the search range or action not diagonalizable")]
    WeightSearch,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
