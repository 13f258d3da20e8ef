use thiserror::Error;

/// Errors raised by graph construction and by operations whose
/// preconditions are violated.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("factor with a single vertex is trivial")]
    TrivialFactor,
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("terminals must be distinct")]
    IdenticalTerminals,
    #[error("terminals {0} and {1} are adjacent")]
    AdjacentTerminals(usize, usize),
    #[error("vertex {0} lies in both X and Y")]
    OverlappingSets(usize),
    #[error("graph of order {n} exceeds brute-force limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
