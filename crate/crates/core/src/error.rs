use thiserror::Error;

/// Errors shared across the geometry and solver modules.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("origin is not strictly interior to the body")]
    OriginNotInterior,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("linear map is singular")]
    SingularMap,
    #[error("body has empty interior")]
    DegenerateBody,
    #[error("curve has zero length")]
    ZeroLength,
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("optimizer failed to converge within the iteration cap")]
    NonConvergence,
    #[error("generator is not normalized to unit length: got {0}")]
    NormalizationError(f64),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
