use thiserror::Error;

use crate::cycle::Violation;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph has {n} vertices, above the configured limit of {limit}")]
    TooManyVertices { n: usize, limit: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{what} exceeded its budget of {budget} steps")]
    BudgetExceeded { what: &'static str, budget: u64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid cycle: {0}")]
    InvalidCycle(Violation),

    #[error("invalid path: {0}")]
    InvalidPath(Violation),

    #[error("vertex {0} is not on the host path or cycle")]
    NotOnHost(usize),

    #[error("infeasible request: {0}")]
    Infeasible(String),

    /// The search stumbled on an independent set that contradicts the
    /// connectivity hypothesis it was promised.
    #[error("hypothesis violated: independent set {0:?} is too large")]
    IndependentSetWitness(Vec<usize>),

    /// A constructive step found no applicable move. The payload is a state dump.
    #[error("stalled: {0}")]
    Stall(String),

    #[error("not found: {0}")]
    NotFound(String),
}

pub type Result<T> = std::result::Result<T, Error>;
