use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex sets over different universes ({left} vs {right})")]
    UniverseMismatch { left: usize, right: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("memo table exceeded its cap of {0} entries")]
    MemoCapExceeded(usize),
    #[error("vertex {0} is not a legal move")]
    IllegalMove(usize),
    #[error("the game is already finished")]
    GameFinished,
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
