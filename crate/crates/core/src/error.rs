use thiserror::Error;

use crate::graph6::Graph6Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),
    #[error("a pair needs two distinct vertices, got ({0}, {0})")]
    SamePair(usize),
    #[error("graph of order {n} is too small (need at least {min})")]
    TooSmall { n: usize, min: usize },
    #[error("no {k}-adjacency generator exists: the graph is only {max}-dimensional")]
    KExceedsDimensionality { k: u32, max: u32 },
    #[error("k = {k} exceeds the dimensionality {max}")]
    KTooLarge { k: u32, max: u32 },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("node budget of {budget} exhausted")]
    BudgetExhausted { budget: u64 },
    #[error("no generator of size at most {cap}")]
    CapExceeded { cap: usize },
    #[error("brute force would evaluate C({n},{size}) subsets, over the limit")]
    BruteForceLimit { n: usize, size: usize },
    #[error("more than {cap} bases; raise the cap to decide this exactly")]
    BasisCapExceeded { cap: usize },
    #[error("{query} is outside the proven range ({range})")]
    OutOfProvenRange { query: String, range: String },
    #[error("graph is not a tree")]
    NotATree,
    #[error("family has {free_pairs} free pairs; a limit is required")]
    LimitRequired { free_pairs: usize },
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("exhaustive enumeration at order {n} is too large (max {max})")]
    TooLarge { n: usize, max: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
