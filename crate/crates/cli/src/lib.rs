//! Command-line front end for scattered-subword complexity.
//!
//! The binary lives in `main.rs`; everything it prints is produced here so it
//! can be tested without spawning a process.

pub mod check;
pub mod commands;
pub mod dot;
pub mod gapspec;
pub mod record;

pub use commands::{count, enumerate, series, CountMethod, SeriesKind};
pub use gapspec::parse_gap_spec;
pub use record::{Format, OutputRecord, SeriesRow};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid gap spec {spec:?}: {reason}")]
    GapSpec { spec: String, reason: String },
    #[error("method {method} cannot be used with gaps {gaps}: {reason}")]
    Incompatible { method: &'static str, gaps: String, reason: &'static str },
    #[error("length must be at least 1")]
    ZeroLength,
    #[error(transparent)]
    Core(#[from] mcomplexity_core::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
