use rayon::prelude::*;
use seqdef_core::sprt::{expected_reports, run_detection_trial, worst_case_bounds, DetectionSummary};
use seqdef_core::AttackPlan;

use super::detector;
use crate::config::ExperimentConfig;
use crate::error::CliError;
use crate::output::{fmt, Table};

pub fn detect(config: &ExperimentConfig) -> Result<Table, CliError> {
    let plan = AttackPlan::new(config.scheme, config.q, config.n)?;
    let det = detector(config.pd, config.pf)?;
    let risk = config.risk()?;
    if config.trials < 1 {
        return Err(CliError::config("trials must be at least 1"));
    }
    let horizon = config.mc.unwrap_or(config.n);
    let runs = (0..config.trials)
        .into_par_iter()
        .map(|t| run_detection_trial(&plan, &det, &risk, horizon, config.seed, t, config.truth))
        .collect::<Result<Vec<_>, _>>()?;
    let s = DetectionSummary::from_runs(&runs);
    let trials = s.trials as f64;

    let mut table = Table::new(&[
        "scheme",
        "q",
        "attacked_nodes",
        "horizon",
        "trials",
        "mean_stop_index",
        "accept_attack_freq",
        "accept_null_freq",
        "truncated_freq",
        "attack_by_threshold_freq",
        "m1_wald",
        "accept_lower_bound",
        "reject_lower_bound",
    ]);
    let m1 = expected_reports(&plan, &det, &risk)?;
    let q_eff = if plan.scheme().is_targeted() { 1.0 } else { plan.q() };
    let (accept, reject) = match config.mc {
        Some(mc) => {
            let b = worst_case_bounds(q_eff, &det, &risk, mc)?;
            (fmt(b.accept_lower_bound), fmt(b.reject_lower_bound))
        }
        None => (String::new(), String::new()),
    };
    table.push(vec![
        plan.scheme().name().into(),
        fmt(plan.q()),
        plan.attacked_nodes().to_string(),
        horizon.to_string(),
        s.trials.to_string(),
        fmt(s.mean_stop_index),
        fmt(s.accept_attack as f64 / trials),
        fmt(s.accept_null as f64 / trials),
        fmt(s.truncated as f64 / trials),
        fmt(s.attack_by_threshold_frequency()),
        fmt(m1),
        accept,
        reject,
    ]);
    Ok(table)
}
