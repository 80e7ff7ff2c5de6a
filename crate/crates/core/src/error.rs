use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}: loops are not allowed")]
    LoopEdge(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("a multigraph must have at least one vertex")]
    NoVertices,

    #[error("too large: {0}")]
    TooLarge(String),

    #[error("too small: {0}")]
    TooSmall(String),

    #[error("eigensolver did not converge within {sweeps} sweeps")]
    NonConvergence { sweeps: usize },

    #[error("matrix is not symmetric at ({i},{j})")]
    NotSymmetric { i: usize, j: usize },

    #[error("matrix is not square: {rows} rows, {cols} columns")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("cut side must be a nonempty proper subset of the vertex set")]
    EmptySide,

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is not simple")]
    NotSimple,

    #[error("graph is not regular")]
    NotRegular,

    #[error("bad parity: {0}")]
    BadParity(String),

    #[error("bad t: {0}")]
    BadT(String),

    #[error("bad n: {0}")]
    BadN(String),

    #[error("negative discriminant: {0}")]
    NegativeDiscriminant(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
