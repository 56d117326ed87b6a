use thiserror::Error;

/// Errors raised by constructors, mechanisms and verifiers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("non-finite coordinate in point")]
    NonFinite,

    #[error("points must have at least one coordinate")]
    EmptyPoint,

    #[error("need at least two candidates, got {0}")]
    TooFewCandidates(usize),

    #[error("candidates {0} and {1} coincide")]
    DuplicateCandidates(usize, usize),

    #[error("candidate index {index} out of range for {m} candidates")]
    CandidateOutOfRange { index: usize, m: usize },

    #[error("a pair needs two distinct candidates, got {0} twice")]
    DegeneratePair(usize),

    #[error("an election needs at least one voter")]
    NoVoters,

    #[error("length mismatch: {what} has {got} entries, expected {expected}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("negative cost {0}")]
    NegativeCost(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("location profile is not consistent with the votes: voter {voter} voted {voted} but nearest are {nearest:?}")]
    Inconsistent {
        voter: usize,
        voted: usize,
        nearest: Vec<usize>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
