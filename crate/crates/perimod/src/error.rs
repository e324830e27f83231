use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("invalid composition: {0}")]
    Composition(String),
    #[error("weight out of range: {0}")]
    WeightRange(String),
    #[error("generator out of range: {0}")]
    Generator(String),
    #[error("inhomogeneous vector")]
    Inhomogeneous,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("search budget exhausted: {0}")]
    Budget(String),
    #[error("elimination fault: {0}")]
    Elimination(String),
    #[error("outside span: {0}")]
    Span(String),
    #[error("inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
