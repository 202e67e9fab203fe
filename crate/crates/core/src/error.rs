use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse permutation: {0}")]
    Parse(String),

    #[error("not a permutation of 1..{n}: {reason}")]
    NotAPermutation { n: usize, reason: String },

    #[error("malformed pile configuration: {0}")]
    MalformedPiles(String),

    #[error("malformed tableau: {0}")]
    MalformedTableau(String),

    #[error("malformed pattern: {0}")]
    MalformedPattern(String),

    #[error(
        "insertion and recording piles have different shapes ({insertion:?} vs {recording:?})"
    )]
    ShapeMismatch {
        insertion: Vec<usize>,
        recording: Vec<usize>,
    },

    #[error("pile pair has no preimage under extended patience sorting")]
    NoPreimage,

    #[error("points do not form a {orientation} antichain: {detail}")]
    NotAntichain {
        orientation: &'static str,
        detail: String,
    },

    #[error("value {0} is already present in the tableau")]
    DuplicateEntry(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
