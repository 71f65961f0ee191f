use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("uniformity mismatch: expected {expected}, got {found}")]
    Uniformity { expected: usize, found: usize },

    #[error("invalid edge {0:?}: vertices must be positive and strictly increasing")]
    InvalidEdge(Vec<u32>),

    #[error("edge {edge:?} exceeds vertex bound n = {n}")]
    VertexBound { edge: Vec<u32>, n: u32 },

    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<u32>),

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: u32, n: u32 },

    #[error("weighting has length {len}, graph needs at least {n}")]
    Dimension { len: usize, n: usize },

    #[error("invalid weighting: {0}")]
    InvalidWeighting(String),

    #[error("graph is not left-compressed")]
    NotLeftCompressed,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("{0}")]
    OutOfRange(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
