//! CSV tables with `#` header lines carrying the configuration.

use std::io::Write;

use crate::config::ExperimentConfig;
use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    /// Extra `key = value` header lines (counts, estimates).
    pub notes: Vec<(String, String)>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Self {
            columns: columns.to_vec(),
            ..Self::default()
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn note(&mut self, key: impl Into<String>, value: impl ToString) {
        self.notes.push((key.into(), value.to_string()));
    }

    /// Index of a column by name.
    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| *c == name)
    }

    pub fn write<W: Write>(&self, config: &ExperimentConfig, mut out: W) -> Result<(), CliError> {
        writeln!(out, "# seqdef {}", config.command.name())?;
        for (k, v) in config.echo() {
            writeln!(out, "# {k} = {v}")?;
        }
        for (k, v) in &self.notes {
            writeln!(out, "# {k} = {v}")?;
        }
        let mut csv = csv::Writer::from_writer(out);
        csv.write_record(&self.columns)?;
        for row in &self.rows {
            csv.write_record(row)?;
        }
        csv.flush()?;
        Ok(())
    }
}

/// Shortest representation that round-trips; exponent notation for very
/// small or large magnitudes.
pub fn fmt(x: f64) -> String {
    format!("{x:?}")
}

pub fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt).unwrap_or_default()
}
