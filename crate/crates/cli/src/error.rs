use thiserror::Error;

/// Failures of a run, each mapped to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or malformed input, bad flags, unknown labels.
    #[error("{0}")]
    Input(String),
    /// A computed identity exceeded the tolerance.
    #[error("{0}")]
    Verification(String),
    /// Irreps are required but none are known for the group.
    #[error("{0}")]
    MissingData(String),
    /// The report could not be written.
    #[error("{0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Output(_) => 1,
            CliError::Input(_) => 2,
            CliError::Verification(_) => 3,
            CliError::MissingData(_) => 4,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
