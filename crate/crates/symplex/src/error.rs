use thiserror::Error;

/// Errors raised by the exact algebra layer and the file formats.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("bilinear form is not skew-symmetric")]
    NotSkew,
    #[error("map is singular")]
    Singular,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid pair isomorphism: {0}")]
    InvalidPair(String),
    #[error("quantity is not well defined: {0}")]
    NotWellDefined(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
