use thiserror::Error;

use crate::dsl::ParseError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },

    #[error("{context}: {source}")]
    Core {
        context: String,
        source: gradedq::Error,
    },

    #[error("{0}")]
    Usage(String),

    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}
