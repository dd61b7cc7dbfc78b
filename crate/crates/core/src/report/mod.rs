//! Config-driven front end: structured reports, figures and grid checks.

pub mod config;
pub mod document;
pub mod grid;
pub mod svg;

use thiserror::Error;

use crate::error::Error;

/// Failures surfaced by the command line, each with its exit status.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error("invalid input: {0}")]
    Validation(String),

    #[error("{0}")]
    Truncation(String),

    #[error("i/o failure: {0}")]
    Io(String),
}

impl ReportError {
    pub fn exit_code(&self) -> i32 {
        match self {
            ReportError::Io(_) => 1,
            ReportError::Validation(_) => 2,
            ReportError::Truncation(_) => 3,
        }
    }
}

impl From<Error> for ReportError {
    fn from(e: Error) -> Self {
        match e {
            Error::Truncation { .. } => ReportError::Truncation(e.to_string()),
            other => ReportError::Validation(other.to_string()),
        }
    }
}

impl From<std::io::Error> for ReportError {
    fn from(e: std::io::Error) -> Self {
        ReportError::Io(e.to_string())
    }
}
