use jonesvol_core::Error as CoreError;

/// Failure of a command, carrying its process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),

    #[error(transparent)]
    Math(CoreError),

    #[error("resource guard: {0}")]
    Guard(String),

    #[error("{0} check(s) failed")]
    CheckFailed(usize),

    #[error("output error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::CheckFailed(_) => 1,
            CliError::Input(_) => 2,
            CliError::Math(_) => 3,
            CliError::Guard(_) => 4,
            CliError::Io(_) => 3,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::BraidParse { .. }
            | CoreError::GeneratorOutOfRange { .. }
            | CoreError::InvalidArgument(_) => CliError::Input(e.to_string()),
            other => CliError::Math(other),
        }
    }
}

/// Largest state-space size `N^n` the state sum will attempt.
pub const STATE_LIMIT: f64 = 1e7;

pub fn guard_state_space(color: usize, strands: usize) -> Result<(), CliError> {
    let size = (color as f64).powi(strands as i32);
    if size > STATE_LIMIT {
        return Err(CliError::Guard(format!(
            "N^n = {color}^{strands} exceeds the state-sum limit of 1e7"
        )));
    }
    Ok(())
}
