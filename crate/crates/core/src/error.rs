use thiserror::Error;

use crate::ordering::TripleWitness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("ordering has {found} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },

    #[error("ordering is not a permutation: vertex {0} appears more than once")]
    DuplicateInOrdering(usize),

    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is not connected")]
    Disconnected,

    /// An ordering failed a characterization it was required to satisfy.
    #[error("precondition failed: {0}")]
    Precondition(TripleWitness),

    #[error("{limit_name} limit exceeded: n = {n}, limit = {limit}")]
    SizeLimit {
        limit_name: &'static str,
        n: usize,
        limit: usize,
    },

    /// Indicates a bug, never bad input.
    #[error("internal consistency error: {0}")]
    Internal(String),
}
