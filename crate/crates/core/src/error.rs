use thiserror::Error;

use crate::bitword::BitWord;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("word length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("word length {0} exceeds the supported maximum of 64")]
    WordTooLong(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("invalid code parameters: {0}")]
    InvalidCode(String),

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("word {0} does not have weight divisible by 4")]
    NotDoublyEven(BitWord),

    #[error("projectors for {0} and {1} do not commute (odd overlap)")]
    NonCommuting(BitWord, BitWord),

    #[error("generators are linearly dependent")]
    DependentGenerators,

    #[error("index {index} out of range for {bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("malformed graph: {0}")]
    Structure(String),

    #[error("graph is not a valid Cliffordinkra: {0}")]
    InvalidGraph(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("matrix {index} is not a signed permutation: {reason}")]
    NotSignedPermutation { index: usize, reason: String },

    #[error("matrix {0} does not exchange bosons and fermions")]
    NotGraded(usize),

    #[error("Clifford relation fails for generators {0} and {1}")]
    RelationFailure(usize, usize),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}
