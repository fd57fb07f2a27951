use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown node id {0}")]
    UnknownNode(usize),

    #[error("unknown node label {0:?}")]
    UnknownLabel(String),

    #[error("invalid probability vector: {0}")]
    Domain(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
