//! Report generation behind the command-line interface.
//!
//! Each `cmd_*` function takes a [`RunConfig`], writes one or more CSV files
//! into its output directory and returns their paths.

mod audit;
mod commands;
mod config;
mod table;

use std::path::PathBuf;

pub use audit::{audit_rows, classify, AuditRow, Status, REQUIRED_CLAIMS};
pub use commands::{cmd_audit, cmd_kessence, cmd_landscape, cmd_profile, cmd_rates, cmd_slowroll};
pub use config::{RunConfig, KEYS};
pub use table::{format_number, Cell, Table};

/// Failures of a report command, each mapped to a process exit code.
#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Compute(#[from] crate::Error),

    #[error("cannot write {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl ReportError {
    /// 1 for configuration and numerical failures, 2 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            ReportError::Config(_) | ReportError::Compute(_) => 1,
            ReportError::Io { .. } => 2,
        }
    }

    /// The diagnostic without the variant prefix, for nesting.
    pub fn detail(&self) -> String {
        match self {
            ReportError::Config(s) => s.clone(),
            other => other.message(),
        }
    }

    /// The diagnostic as a single line.
    pub fn message(&self) -> String {
        self.to_string().replace('\n', " ")
    }
}
