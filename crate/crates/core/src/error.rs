use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is not chordal")]
    NotChordal,

    /// A result violated an invariant that the producing algorithm guarantees.
    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("oracle refuses a graph with {n} vertices (cap is {cap})")]
    OracleCap { n: usize, cap: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("preprocessing did not converge within {0} rounds")]
    RoundCap(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
