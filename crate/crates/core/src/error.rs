use thiserror::Error;

/// Errors raised by graph, polytope and algebra operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0} is not allowed in a simple graph")]
    LoopNotAllowed(usize),

    #[error("graphs with more than {max} vertices are not supported (got {got})")]
    TooManyVertices { got: usize, max: usize },

    #[error("not a cycle of the graph: {0}")]
    NotACycle(String),

    #[error("identified overlap is not a clique in {0}")]
    OverlapNotClique(&'static str),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("stability number must be 2 (got {0})")]
    StabilityNumberNotTwo(usize),

    #[error("complement is not bipartite")]
    ComplementNotBipartite,

    #[error("configuration has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("configuration has a negative coordinate")]
    NegativeCoordinate,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("generator {0} is not homogeneous")]
    NotHomogeneous(String),

    #[error("invalid walk: {0}")]
    InvalidWalk(String),

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
