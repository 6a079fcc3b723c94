use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied argument is outside the operation's domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Malformed graph text; `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A configured resource limit (adjacency memory cap) would be exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// A mathematical helper was evaluated outside its domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A structural invariant between deciders failed. Never expected.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
