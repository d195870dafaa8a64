use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("cell of level {found} cannot enter a level-{level} operation")]
    LevelMismatch { level: usize, found: usize },

    #[error("invalid cell: {0}")]
    InvalidCell(String),

    #[error("invalid arguments: {0}")]
    InvalidArguments(String),

    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("integer overflow during {0}")]
    Overflow(&'static str),

    #[error(transparent)]
    Core(#[from] weyl_core::Error),
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse { input: input.to_string(), reason: reason.into() }
    }
}
