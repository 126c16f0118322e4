use std::io;

use crate::io::LoadError;

/// Everything a command can fail with, mapped onto the process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Input(#[from] LoadError),

    #[error(transparent)]
    Model(#[from] seqdef_core::Error),

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("i/o error: {0}")]
    Io(#[from] io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

impl CliError {
    pub fn config(msg: impl Into<String>) -> Self {
        CliError::Config(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        use seqdef_core::Error as E;
        match self {
            CliError::Config(_) | CliError::Input(_) => EXIT_CONFIG,
            CliError::Numerical(_) => EXIT_NUMERICAL,
            CliError::Model(e) => match e {
                E::NoRoot { .. }
                | E::NotConverged { .. }
                | E::Infeasible { .. }
                | E::IdenticalHypotheses { .. }
                | E::Unrealizable { .. } => EXIT_NUMERICAL,
                _ => EXIT_CONFIG,
            },
            CliError::Io(_) | CliError::Csv(_) => 1,
        }
    }
}
