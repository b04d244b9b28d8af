use num_bigint::BigInt;
use thiserror::Error;

use crate::rootdata::Weight;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no simple root system of type {series}{rank}")]
    InvalidType { series: char, rank: usize },

    #[error("cannot parse root datum tag {0:?}")]
    BadTypeTag(String),

    #[error("node index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("root datum mismatch: {left} vs {right}")]
    DatumMismatch { left: String, right: String },

    #[error("Weyl group enumeration exceeded cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("more than {limit} reduced words")]
    WordSpaceTooLarge { limit: usize },

    #[error("word of length {len} exceeds the maximum of {max}")]
    WordTooLong { len: usize, max: usize },

    #[error("division is not exact")]
    NotDivisible,

    #[error("division by the zero character")]
    DivisionByZero,

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    /// The character has a nonzero counit defect `D_i(f) - f` at node `index`.
    #[error("not in the descent category: nonzero counit defect at node {index}")]
    NotInDescentCategory { index: usize, defect: Vec<(Weight, BigInt)> },

    #[error("malformed input: {0}")]
    Format(String),
}

impl Error {
    /// Stable machine-readable code, used in CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidType { .. } => "InvalidType",
            Error::BadTypeTag(_) => "InvalidType",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::RankMismatch { .. } => "RankMismatch",
            Error::DatumMismatch { .. } => "DatumMismatch",
            Error::GroupTooLarge { .. } => "GroupTooLarge",
            Error::WordSpaceTooLarge { .. } => "WordSpaceTooLarge",
            Error::WordTooLong { .. } => "WordTooLong",
            Error::NotDivisible => "NotDivisible",
            Error::DivisionByZero => "DivisionByZero",
            Error::NotDominant(_) => "NotDominant",
            Error::NotInDescentCategory { .. } => "NotInDescentCategory",
            Error::Format(_) => "InvalidFormat",
        }
    }
}
