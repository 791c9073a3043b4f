use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system {family} of rank {rank}: {reason}")]
    InvalidRootSystem { family: String, rank: usize, reason: String },

    #[error("node index {index} out of range for rank {rank}")]
    NodeOutOfRange { index: usize, rank: usize },

    #[error("weight has {got} coordinates, ambient rank is {expected}")]
    RankMismatch { expected: usize, got: usize },

    #[error("the zero vector is not a root")]
    ZeroRoot,

    #[error("{0} is not a root of this root system")]
    NotARoot(String),

    #[error("node {node} is not a special node of {family}")]
    NonSpecialNode { family: String, node: usize },

    #[error("highest weight {0} is not dominant")]
    NotDominant(String),

    #[error("not a true character: dominant weight {weight} would get multiplicity {multiplicity}")]
    NotACharacter { weight: String, multiplicity: i64 },

    #[error("character is not Weyl invariant at weight {0}")]
    NotWeylInvariant(String),

    #[error("size guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("invalid domain parameters: {0}")]
    InvalidDomain(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("golden table: {0}")]
    Golden(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
