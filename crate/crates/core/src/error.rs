use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid parameter: {0}")]
    InvalidParams(String),

    /// A structural assumption between pipeline stages was violated.
    #[error("internal consistency error: {0}")]
    Consistency(String),

    #[error("ink parse error{}: {message}", trace.map(|t| format!(" in trace {t}")).unwrap_or_default())]
    Parse {
        trace: Option<usize>,
        message: String,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("image error: {0}")]
    Image(#[from] image::ImageError),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("config error: {0}")]
    Config(String),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(trace: Option<usize>, message: impl Into<String>) -> Self {
        Error::Parse {
            trace,
            message: message.into(),
        }
    }
}
