use thiserror::Error;

/// Reasons a rank-decomposition fails validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RankDecompositionError {
    #[error("inner node {node} has degree {degree}, expected 3")]
    Degree { node: usize, degree: usize },
    #[error("vertices {first} and {second} are both mapped to node {node}")]
    NotInjective {
        first: usize,
        second: usize,
        node: usize,
    },
    #[error("vertex {vertex} is mapped to inner node {node}")]
    NonLeafImage { vertex: usize, node: usize },
    #[error("leaf {node} carries no vertex")]
    UncoveredLeaf { node: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("node {node} out of range for a tree on {nodes} nodes")]
    NodeOutOfRange { node: usize, nodes: usize },
    #[error("invalid input: {0}")]
    Input(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0} is not a tree edge")]
    NotATreeEdge(String),
    #[error("decomposition is not rooted")]
    Unrooted,
    #[error("invalid rank-decomposition: {0}")]
    RankDecomposition(#[from] RankDecompositionError),
    #[error("{what}: size {size} exceeds the configured limit {limit}")]
    Resource {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("decomposition diversity {actual} exceeds d = {allowed}")]
    DiversityExceeded { actual: usize, allowed: usize },
    #[error("decomposition rank {actual} exceeds r = {allowed}")]
    RankExceeded { actual: usize, allowed: usize },
    #[error("piece coloring at node {node} uses {used} colors, budget is {budget}")]
    OracleBudget {
        node: usize,
        used: usize,
        budget: usize,
    },
    #[error("piece coloring at node {node} is not proper")]
    OracleImproper { node: usize },
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
