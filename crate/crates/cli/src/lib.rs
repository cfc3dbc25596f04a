//! Parallel drivers, output formats and subcommand implementations for the
//! `runforge` command-line tool.

pub mod commands;
pub mod output;
pub mod parallel;

pub use output::{Format, Output};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] runforge_core::Error),

    #[error("{0}")]
    Usage(String),

    #[error("{0}")]
    Budget(String),

    /// A runtime cross-check failed. `output` carries the partial report.
    #[error("invariant violation: {message}")]
    Invariant {
        message: String,
        output: Option<Box<Output>>,
    },
}

impl CliError {
    pub fn invariant(message: String) -> Self {
        CliError::Invariant {
            message,
            output: None,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(runforge_core::Error::Capacity(_)) | CliError::Budget(_) => 3,
            CliError::Core(_) | CliError::Usage(_) => 2,
            CliError::Invariant { .. } => 4,
        }
    }
}
