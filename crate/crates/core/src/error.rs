use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("matrix is not unimodular (determinant is not +-1)")]
    NotUnimodular,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),
}

pub type Result<T> = std::result::Result<T, Error>;
