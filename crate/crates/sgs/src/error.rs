use thiserror::Error;

#[derive(Debug, Error)]
pub enum SgsError {
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("vertex index {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },

    #[error("loop at vertex {0} is not allowed")]
    Loop(usize),

    #[error("invalid sign token `{0}` (expected + or -)")]
    InvalidSign(String),

    #[error("graph is not connected")]
    NotConnected,

    #[error("image array of length {got} is not a permutation of 0..{n}")]
    NotAPermutation { got: usize, n: usize },

    #[error("permutation is not an automorphism of the underlying graph")]
    NotAnAutomorphism,

    #[error("{what} exceeds cap: {actual} > {cap}")]
    CapExceeded {
        what: &'static str,
        cap: usize,
        actual: usize,
    },

    #[error("matrix dimension mismatch: {0}x{0} vs {1}x{1}")]
    DimensionMismatch(usize, usize),

    #[error("matrix entry {entry} at ({row}, {col}) is outside {{0, 1, -1}}")]
    BadMatrixEntry { entry: i64, row: usize, col: usize },

    #[error("nonzero diagonal entry at index {0}: an adjacency matrix needs a zero diagonal")]
    NonzeroDiagonal(usize),

    #[error("invalid construction: {0}")]
    Construction(String),

    #[error("invariant falsified: {0}")]
    Falsification(String),

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, SgsError>;

impl SgsError {
    /// CLI exit code: 2 for input problems, 3 for resource caps, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            SgsError::CapExceeded { .. } => 3,
            SgsError::Parse { .. }
            | SgsError::VertexOutOfRange { .. }
            | SgsError::DuplicateEdge { .. }
            | SgsError::Loop(_)
            | SgsError::InvalidSign(_)
            | SgsError::NotConnected
            | SgsError::NotAPermutation { .. }
            | SgsError::NotAnAutomorphism
            | SgsError::DimensionMismatch(..)
            | SgsError::BadMatrixEntry { .. }
            | SgsError::NonzeroDiagonal(_)
            | SgsError::Construction(_)
            | SgsError::UnknownSuite(_)
            | SgsError::Io(_) => 2,
            SgsError::Falsification(_) => 1,
        }
    }
}
