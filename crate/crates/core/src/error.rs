use thiserror::Error;

/// Errors produced anywhere in the pipeline.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A graph or search would exceed a fixed capacity.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is not bipartite")]
    NotBipartite,

    /// The request lies outside the range where the bound theorem applies (t < 5).
    #[error("out of theorem scope: {0}")]
    OutOfScope(String),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
