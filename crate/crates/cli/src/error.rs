use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = CliError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },

    #[error("schema error in {origin} at `{path}`: {message}")]
    Schema { origin: String, path: String, message: String },

    #[error(transparent)]
    Core(#[from] weyl_core::Error),

    #[error(transparent)]
    Complex(#[from] abelian_complex::Error),

    #[error("{0}")]
    Usage(String),
}
