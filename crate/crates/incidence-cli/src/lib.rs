//! Implementation of the `incidence` command-line tool: configuration
//! serialization, range specifications, and the four subcommands.

use std::fmt;

pub mod commands;
pub mod format;
pub mod rangespec;

/// Errors surfaced to the user, each mapped to a fixed process exit code:
/// 1 validation, 2 verification mismatch, 3 I/O, 4 overflow.
#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Mismatch(String),
    Io(String),
    Overflow(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Mismatch(_) => 2,
            CliError::Io(_) => 3,
            CliError::Overflow(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(msg) => write!(f, "{msg}"),
            CliError::Mismatch(msg) => write!(f, "verification mismatch: {msg}"),
            CliError::Io(msg) => write!(f, "I/O error: {msg}"),
            CliError::Overflow(msg) => write!(f, "overflow: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<incidence::Error> for CliError {
    fn from(err: incidence::Error) -> Self {
        match err {
            incidence::Error::Overflow(_) => CliError::Overflow(err.to_string()),
            _ => CliError::Validation(err.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(err: csv::Error) -> Self {
        CliError::Io(err.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
