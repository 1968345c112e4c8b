use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Invalid(#[from] balanced_core::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed spec file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    /// 2 for unusable input, 3 for a regression mismatch.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) => 3,
            _ => 2,
        }
    }
}
