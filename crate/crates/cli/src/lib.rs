//! Library side of the `tbk` command: parsing, execution and JSON documents.

mod report;
mod request;
mod run;

use std::path::PathBuf;

use serde::Serialize;
use tbk_core::ford::FordError;
use tbk_core::prep::PrepError;
use tbk_core::TwoBridgeForm;
use thiserror::Error;

pub use report::*;
pub use request::{parse_command, CommandRequest, Options, SubcommandKind};
pub use run::{run_report, Outcome, Status};

/// Exit status for usage and operational errors.
pub const EXIT_ERROR: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Clap(clap::Error),
    #[error("usage: {0}")]
    Usage(String),
    #[error("{factor} does not divide Lambda for {form}")]
    NotAFactor { factor: String, form: TwoBridgeForm },
    #[error("root {index} requested but there are {count} roots")]
    RootIndex { index: usize, count: usize },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("TBK_THREADS: {0}")]
    Threads(String),
    #[error(transparent)]
    Prep(#[from] PrepError),
    #[error(transparent)]
    Ford(#[from] FordError),
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
}

#[derive(Serialize)]
struct ErrorDocument<'a> {
    error: ErrorBody<'a>,
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Clap(_) | CliError::Usage(_) => "usage",
            CliError::NotAFactor { .. } => "not_a_factor",
            CliError::RootIndex { .. } => "root_index",
            CliError::Io { .. } => "io",
            CliError::Threads(_) => "threads",
            CliError::Prep(_) => "prep",
            CliError::Ford(_) => "ford",
        }
    }

    /// Structured form written to stderr.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&ErrorDocument {
            error: ErrorBody {
                kind: self.kind(),
                message: self.to_string(),
            },
        })
        .expect("error document serializes")
    }
}

/// Caps the global rayon pool from `TBK_THREADS` when set.
pub fn configure_threads(value: Option<&str>) -> Result<(), CliError> {
    let Some(v) = value else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Threads(format!("expected a positive integer, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Threads(e.to_string()))
}
