use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("span dimension {dim} exceeds the enumeration limit of {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("{what}: {needed} evaluations exceed the guard of {limit}")]
    GuardExceeded {
        what: &'static str,
        needed: u128,
        limit: u128,
    },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("block length {0} exceeds the 128-position limit of the mask engine")]
    LengthTooLarge(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("rank deficiency: expected rank {expected}, got {got}")]
    RankDeficient { expected: usize, got: usize },

    #[error("permutation {0} is not an automorphism of the code")]
    NotAutomorphism(String),

    #[error("row {row} is not a codeword of the dual code")]
    NotInDual { row: usize },

    #[error("greedy construction stalled with {residual} unresolved stopping sets of size {size}")]
    GreedyStall { size: usize, residual: usize },

    #[error("guessing depth limit {0} reached")]
    DepthLimit(usize),

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("inconsistent enumerator: {0}")]
    InconsistentEnumerator(String),

    #[error("construction failed: {0}")]
    Construction(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
