use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("edge ({0}, {1}) is out of range for a graph on {2} vertices")]
    EdgeOutOfRange(usize, usize, usize),

    #[error("edge ({0}, {0}) is a loop")]
    Loop(usize),

    #[error("vertex {0} is out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),

    #[error("graph6 format error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: graph contains the forbidden subgraph (embedding {embedding:?})")]
    ContainsForbidden { embedding: Vec<usize> },

    #[error("no graph with the requested properties exists: {0}")]
    NotFound(String),

    #[error("computation failed: {0}")]
    Computation(String),

    #[error("order {n} exceeds the built-in enumeration cap of {cap}; ingest a corpus file instead")]
    CapacityExceeded { n: usize, cap: usize },

    #[error("corpus line {line}: {message}")]
    CorpusLine { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
