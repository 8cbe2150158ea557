use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HyperError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("vertex count {n} outside supported range {min}..={max}")]
    VertexCount { n: usize, min: usize, max: usize },

    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge mask {mask:#b} has bits above vertex {n}")]
    EdgeOutOfRange { mask: u64, n: usize },

    #[error("{n} qubits exceed the dense limit of {limit} (2^n table would not fit)")]
    DenseTooLarge { n: usize, limit: usize },

    #[error("{m} hyperedges exceed the inclusion-exclusion limit of {limit}")]
    TooManyEdges { m: usize, limit: usize },

    #[error("hypergraph does not contain the full hyperedge [{n}]")]
    MissingFullEdge { n: usize },

    #[error("Hamming weight {hw} outside 0..={max}")]
    WeightOutOfRange { hw: u64, max: u64 },

    #[error("matrix is not unitary (deviation {deviation:e})")]
    NonUnitary { deviation: f64 },

    #[error("vertex counts differ: {0} vs {1}")]
    VertexCountMismatch(usize, usize),

    #[error("exhaustive enumeration over n = {n} is infeasible (max {max})")]
    EnumerationTooLarge { n: usize, max: usize },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for HyperError {
    fn from(e: std::io::Error) -> Self {
        HyperError::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, HyperError>;
