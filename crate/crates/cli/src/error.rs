//! Failures of a CLI run and their exit codes.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    NotConverged(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::NotConverged(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl From<foxwright::Error> for CliError {
    fn from(e: foxwright::Error) -> Self {
        match e {
            foxwright::Error::Domain(_) | foxwright::Error::Divergent(_) => CliError::Domain(e.to_string()),
            foxwright::Error::Overflow { .. } | foxwright::Error::Accuracy { .. } => CliError::NotConverged(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
