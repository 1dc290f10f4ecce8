use thiserror::Error;

/// Errors produced by graph construction, analysis, and solving.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {index} out of range for a graph with {n} vertices")]
    InvalidVertex { index: usize, n: usize },

    #[error("operation requires two distinct vertices, got {0} twice")]
    IdenticalVertices(usize),

    #[error("BFS source {0} is in the blocked set")]
    SourceBlocked(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is not strongly connected")]
    NotStronglyConnected,

    #[error("arc ({0}, {1}) is not a strong bridge")]
    NotStrongBridge(usize, usize),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph has {n} vertices, above the oracle cap of {cap}")]
    OracleCapExceeded { n: usize, cap: usize },

    #[error("largest strongly connected component has {scc_size} vertices, above the search budget of {budget}")]
    BudgetExceeded { scc_size: usize, budget: usize },

    #[error("no subset of the vertices (including the empty set) satisfies the {0} visibility condition")]
    NoValidSet(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
