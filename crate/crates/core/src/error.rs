use thiserror::Error;

use crate::word::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} outside supported range 1..=32")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("malformed graph6 input: {0}")]
    Graph6(String),
    #[error("graph has an isolated vertex ({0}); normalized adjacency is undefined")]
    IsolatedVertex(usize),
    #[error("vertex counts differ: {0} vs {1}")]
    VertexCountMismatch(usize, usize),
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("matrix dimension mismatch: {0}")]
    Dimension(String),
    #[error("expected a tree")]
    NotATree,
    #[error("not a full binary tree: vertex {0} has {1} children")]
    NotFullBinary(usize, usize),
    #[error("invalid block set: {0}")]
    InvalidBlocks(String),
    #[error("input too large for brute-force oracle: {0}")]
    TooLarge(String),
    #[error("invalid ornament parameters p={p}, q={q}")]
    OrnamentParams { p: usize, q: usize },
    #[error("intertwiner undefined for p={p}, q={q} (needs p+q >= 4)")]
    IntertwinerUndefined { p: usize, q: usize },
    #[error("invalid limb occurrence at vertex {0}")]
    InvalidOccurrence(usize),
    #[error("unsupported census configuration: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;
