use std::io;
use std::path::PathBuf;

use gbo_core::GboError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Core(#[from] GboError),

    #[error("invalid experiment: {0}")]
    InvalidSpec(String),

    #[error("{function}/{algorithm}: {found} successful repeats, stability needs at least {needed}")]
    InsufficientRepeats {
        function: String,
        algorithm: String,
        found: usize,
        needed: usize,
    },

    #[error("result table has no rows")]
    EmptyTable,

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl HarnessError {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Self::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T, E = HarnessError> = std::result::Result<T, E>;
