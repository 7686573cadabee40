//! Command-line frontend for `bicov-core`.
//!
//! Exit codes: 0 success, 1 output failure, 2 input error, 3 verification
//! failure, 4 missing irreps.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod report;

use std::fs;

pub use args::Cli;
pub use commands::Outcome;
pub use config::RunConfig;
pub use error::{CliError, CliResult};

/// Loads the group, runs the command and writes `--out` when requested.
/// Returns what belongs on standard output.
pub fn execute(config: &RunConfig) -> CliResult<Outcome> {
    config.validate()?;
    let group = config::load_group(config)?;
    let mut outcome = commands::run(config, &group)?;
    if let Some(path) = &config.out {
        let payload = outcome
            .artifact
            .take()
            .unwrap_or_else(|| std::mem::take(&mut outcome.rendered));
        fs::write(path, payload)
            .map_err(|e| CliError::Output(format!("{}: {e}", path.display())))?;
    }
    Ok(outcome)
}
