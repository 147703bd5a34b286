//! Command-line front door: instance documents, DOT output, oracle sweeps,
//! and interactive play.

pub mod commands;
pub mod doc;
pub mod dot;
pub mod play;

/// Errors carrying the process exit code: oracle mismatches exit 1, parse
/// errors 2, semantic failures 3, I/O errors 4.
#[derive(Debug)]
pub enum CliError {
    OracleMismatch(String),
    Parse(String),
    Semantic(String),
    Io(String),
    ValidationFailed,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::OracleMismatch(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Semantic(_) => 3,
            CliError::Io(_) => 4,
            CliError::ValidationFailed => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::OracleMismatch(m) => write!(f, "oracle mismatch: {m}"),
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Semantic(m) => write!(f, "semantic error: {m}"),
            CliError::Io(m) => write!(f, "io error: {m}"),
            CliError::ValidationFailed => write!(f, "instance failed validation"),
        }
    }
}

impl std::error::Error for CliError {}
