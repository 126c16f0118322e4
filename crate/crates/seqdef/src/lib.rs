//! Command-line front end: configuration, text formats and the experiment
//! commands that write CSV tables.

pub mod config;
pub mod error;
pub mod experiments;
pub mod io;
pub mod output;

use std::fs::File;
use std::io::{BufWriter, Write};

pub use config::{Command, ExperimentConfig};
pub use error::CliError;
pub use output::Table;

/// Runs the configured command and writes its table to `config.out`, or to
/// stdout when unset.
pub fn execute(config: &ExperimentConfig) -> Result<(), CliError> {
    let table = experiments::run(config)?;
    match &config.out {
        Some(path) => {
            let mut out = BufWriter::new(File::create(path)?);
            table.write(config, &mut out)?;
            out.flush()?;
        }
        None => {
            let stdout = std::io::stdout();
            table.write(config, stdout.lock())?;
        }
    }
    Ok(())
}
