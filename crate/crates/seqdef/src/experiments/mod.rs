//! One function per command, each returning a finished table.

mod analytic;
mod detection;
mod network;

pub use analytic::{empirical, m1, operation_curves, qc_sweep, thresholds, worst_case, EMPIRICAL_NETWORKS};
pub use detection::detect;
pub use network::{attack, powergrid};

use seqdef_core::degree::{DegreeKind, DegreeModel, NetworkSize};
use seqdef_core::sprt::DetectorProfile;

use crate::config::{Command, ExperimentConfig, ModelChoice};
use crate::error::CliError;
use crate::output::Table;

pub fn run(config: &ExperimentConfig) -> Result<Table, CliError> {
    match config.command {
        Command::QcSweep => qc_sweep(config),
        Command::M1 => m1(config),
        Command::WorstCase => worst_case(config),
        Command::Empirical => empirical(config),
        Command::Powergrid => powergrid(config),
        Command::OperationCurves => operation_curves(config),
        Command::Detect => detect(config),
        Command::Attack => attack(config),
        Command::Thresholds => thresholds(config),
    }
}

/// The configured parametric model on `[kmin, kmax]` with `n` nodes.
fn configured_model(config: &ExperimentConfig) -> Result<DegreeModel, CliError> {
    let kind = match config.model {
        ModelChoice::ErdosRenyi => DegreeKind::ErdosRenyi {
            mean_degree: config.khat,
        },
        ModelChoice::PowerLaw => DegreeKind::PowerLaw { exponent: config.alpha },
        ModelChoice::Exponential => DegreeKind::Exponential { scale: config.beta },
    };
    Ok(DegreeModel::new(kind, config.kmin, config.kmax, NetworkSize::Finite(config.n))?)
}

fn detector(p_d: f64, p_f: f64) -> Result<DetectorProfile, CliError> {
    Ok(DetectorProfile::new(p_d, p_f)?)
}

fn model_parameter(model: &DegreeModel) -> f64 {
    match model.kind() {
        DegreeKind::ErdosRenyi { mean_degree } => *mean_degree,
        DegreeKind::PowerLaw { exponent } => *exponent,
        DegreeKind::Exponential { scale } => *scale,
        DegreeKind::Empirical(_) => f64::NAN,
    }
}
