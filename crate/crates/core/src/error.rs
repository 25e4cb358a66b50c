use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("lowest term of the zero polynomial is undefined")]
    ZeroPolynomial,

    #[error("not a Laplacian characteristic polynomial: {0}")]
    InvalidCharpoly(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("enumeration refused: n = {n} exceeds the configured cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("term table parse error on line {line}: {reason}")]
    TermTable { line: usize, reason: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
