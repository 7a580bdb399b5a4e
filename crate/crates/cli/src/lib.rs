//! Library backing the `estrada` binary: edge-list parsing, report
//! rendering, and the verification pipelines that re-check the extremal
//! statements by exhaustive enumeration. The binary in `main.rs` is a thin
//! argument-parsing shell; everything testable lives here.

pub mod commands;
pub mod parse;
pub mod report;
pub mod verify;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] estrada_core::Error),
    #[error("serialization failed: {0}")]
    Serialize(#[from] serde_json::Error),
}

/// Process exit code policy: 0 success/confirmed, 1 refuted or mismatch,
/// 2 usage, parse, or I/O failure.
pub fn exit_code_for(err: &CliError) -> i32 {
    match err {
        CliError::Usage(_)
        | CliError::Parse { .. }
        | CliError::Io(_)
        | CliError::Core(_)
        | CliError::Serialize(_) => 2,
    }
}
