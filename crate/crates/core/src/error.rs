use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} is outside the vertex set [1, {n}]")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid vertex count {0}: expected 1 <= n <= 63")]
    InvalidVertexCount(usize),

    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<usize>),

    #[error("operation is undefined on the void complex")]
    VoidComplex,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("vertex count {n} exceeds the enumeration guard {limit}")]
    GuardExceeded { n: usize, limit: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("composite of differentials is nonzero at column {column}")]
    NonzeroComposite { column: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("oracle failure: {0}")]
    Oracle(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
