use seqdef_core::degree::{DegreeModel, ModelFamily, NetworkSize};
use seqdef_core::design::{divergence_is_monotone, min_detection};
use seqdef_core::percolation::{self, qc_intentional_with, qc_random, removal_budget, CriticalValueReport, IntentionalOptions, SolveMethod};
use seqdef_core::sprt::{expected_reports_intentional, expected_reports_random, worst_case_bounds, RiskBudget};
use seqdef_core::Error;

use super::{configured_model, detector, model_parameter};
use crate::config::{ExperimentConfig, M1Kind};
use crate::error::CliError;
use crate::io::load_histogram;
use crate::output::{fmt, fmt_opt, Table};

fn intentional_options(config: &ExperimentConfig) -> IntentionalOptions {
    IntentionalOptions {
        exponential: config.exponential_form,
        ..IntentionalOptions::default()
    }
}

/// `q_c`, with a network that is already fragmented mapped to 0.
fn qc_or_zero(report: Result<CriticalValueReport, Error>) -> Result<(f64, f64), CliError> {
    match report {
        Ok(r) => Ok((r.qc, r.tau)),
        Err(Error::AlreadyDisconnected { tau }) => Ok((0.0, tau)),
        Err(e) => Err(e.into()),
    }
}

/// Expected report count, infinite when the hypotheses coincide.
fn m1_or_inf(value: Result<f64, Error>) -> Result<f64, CliError> {
    match value {
        Ok(m) => Ok(m),
        Err(Error::IdenticalHypotheses { .. }) => Ok(f64::INFINITY),
        Err(e) => Err(e.into()),
    }
}

pub fn qc_sweep(config: &ExperimentConfig) -> Result<Table, CliError> {
    let mut table = Table::new(&["model", "mean_degree", "parameter", "tau", "qc_random", "qc_intentional"]);
    let opts = intentional_options(config);
    let mut no_root = Vec::new();
    for &mean in &config.mean_grid {
        for family in ModelFamily::ALL {
            let model = DegreeModel::matching_mean(family, mean, config.kmin, config.kmax, NetworkSize::Finite(config.n))?;
            let (ran, tau) = qc_or_zero(qc_random(&model))?;
            let int = match qc_intentional_with(&model, &opts) {
                Err(Error::NoRoot { .. }) => {
                    no_root.push(format!("{}@{mean}", family.name()));
                    None
                }
                other => Some(qc_or_zero(other)?.0),
            };
            table.push(vec![
                family.name().into(),
                fmt(mean),
                fmt(model_parameter(&model)),
                fmt(tau),
                fmt(ran),
                fmt_opt(int),
            ]);
        }
    }
    if !no_root.is_empty() {
        table.note("qc_intentional_no_root", no_root.join(" "));
    }
    Ok(table)
}

pub fn m1(config: &ExperimentConfig) -> Result<Table, CliError> {
    let mut table = Table::new(&["kind", "model", "param", "q", "pd", "pf", "m1"]);
    let risk = config.risk()?;
    let all = config.kind == M1Kind::All;
    if all || config.kind == M1Kind::Random {
        for &pf in &config.pf_grid {
            for &q in &config.q_grid {
                for &pd in &config.pd_grid {
                    let m = m1_or_inf(expected_reports_random(q, &detector(pd, pf)?, &risk))?;
                    table.push(vec!["random".into(), String::new(), String::new(), fmt(q), fmt(pd), fmt(pf), fmt(m)]);
                }
            }
        }
    }
    if all || config.kind == M1Kind::Intentional {
        for &pf in &config.pf_grid {
            for &pd in &config.pd_grid {
                let m = m1_or_inf(expected_reports_intentional(&detector(pd, pf)?, &risk))?;
                table.push(vec!["intentional".into(), String::new(), String::new(), String::new(), fmt(pd), fmt(pf), fmt(m)]);
            }
        }
    }
    if all || config.kind == M1Kind::Surface {
        let size = NetworkSize::Finite(config.n);
        let families = [
            (ModelFamily::ErdosRenyi, &config.khat_grid),
            (ModelFamily::PowerLaw, &config.alpha_grid),
            (ModelFamily::Exponential, &config.beta_grid),
        ];
        for (family, grid) in families {
            for &param in grid {
                let model = match family {
                    ModelFamily::ErdosRenyi => DegreeModel::erdos_renyi(param),
                    ModelFamily::PowerLaw => DegreeModel::power_law(param),
                    ModelFamily::Exponential => DegreeModel::exponential(param),
                }?
                .with_support(config.kmin, config.kmax)?
                .with_size(size)?;
                let (qc, _) = qc_or_zero(qc_random(&model))?;
                for &pd in &config.pd_grid {
                    let det = detector(pd, config.pf)?;
                    let m = if qc > 0.0 {
                        m1_or_inf(expected_reports_random(qc, &det, &risk))?
                    } else {
                        f64::INFINITY
                    };
                    table.push(vec![
                        "surface".into(),
                        family.name().into(),
                        fmt(param),
                        fmt(qc),
                        fmt(pd),
                        fmt(config.pf),
                        fmt(m),
                    ]);
                }
            }
        }
    }
    Ok(table)
}

pub fn worst_case(config: &ExperimentConfig) -> Result<Table, CliError> {
    let mut table = Table::new(&[
        "scheme",
        "qc",
        "mc",
        "pd",
        "pf",
        "accept_lower_bound",
        "reject_lower_bound",
        "delta_at_mc",
        "theta_at_mc",
    ]);
    let risk = config.risk()?;
    for (scheme, targeted) in [("random", false), ("intentional", true)] {
        for &pd in &config.pd_grid {
            let det = detector(pd, config.pf)?;
            for &qc in &config.qc_grid {
                let mc = removal_budget(config.n, qc);
                let q_eff = if targeted { 1.0 } else { qc };
                let row_head = vec![scheme.into(), fmt(qc), mc.to_string(), fmt(pd), fmt(config.pf)];
                let tail = match worst_case_bounds(q_eff, &det, &risk, mc) {
                    Ok(b) => vec![
                        fmt(b.accept_lower_bound),
                        fmt(b.reject_lower_bound),
                        fmt(b.delta_at_mc),
                        fmt(b.theta_at_mc),
                    ],
                    Err(Error::IdenticalHypotheses { .. }) => vec![String::new(); 4],
                    Err(e) => return Err(e.into()),
                };
                table.push([row_head, tail].concat());
            }
        }
    }
    Ok(table)
}

/// Name, family, parameter and node count of the empirical parameter sets.
pub const EMPIRICAL_NETWORKS: [(&str, ModelFamily, f64, u64); 3] = [
    ("www", ModelFamily::PowerLaw, 2.1, 325_729),
    ("internet", ModelFamily::PowerLaw, 2.5, 6209),
    ("eu-grid", ModelFamily::Exponential, 1.63, 2783),
];

pub fn empirical(config: &ExperimentConfig) -> Result<Table, CliError> {
    let mut table = Table::new(&[
        "network",
        "model",
        "param",
        "nodes",
        "qc_random",
        "mc",
        "qc_intentional",
        "mc_intentional",
        "pd",
        "pf",
        "m1_random",
        "m1_intentional",
        "m1_random_below_mc",
        "m1_intentional_below_mc_intentional",
    ]);
    let risk = config.risk()?;
    let opts = intentional_options(config);
    for (name, family, param, nodes) in EMPIRICAL_NETWORKS {
        let model = match family {
            ModelFamily::PowerLaw => DegreeModel::power_law(param),
            _ => DegreeModel::exponential(param),
        }?
        .with_support(config.kmin, config.kmax)?
        .with_size(NetworkSize::Finite(nodes))?;
        let ran = qc_random(&model)?;
        let int = qc_intentional_with(&model, &opts)?;
        let (mc, mc_int) = (ran.removal_budget(nodes), int.removal_budget(nodes));
        for &pf in &config.pf_grid {
            for &pd in &config.pd_grid {
                let det = detector(pd, pf)?;
                let m_ran = m1_or_inf(expected_reports_random(ran.qc, &det, &risk))?;
                let m_int = m1_or_inf(expected_reports_intentional(&det, &risk))?;
                table.push(vec![
                    name.into(),
                    family.name().into(),
                    fmt(param),
                    nodes.to_string(),
                    fmt(ran.qc),
                    mc.to_string(),
                    fmt(int.qc),
                    mc_int.to_string(),
                    fmt(pd),
                    fmt(pf),
                    fmt(m_ran),
                    fmt(m_int),
                    (m_ran < mc as f64).to_string(),
                    (m_int < mc_int as f64).to_string(),
                ]);
            }
        }
    }
    Ok(table)
}

pub fn operation_curves(config: &ExperimentConfig) -> Result<Table, CliError> {
    let mut table = Table::new(&["mc", "pf", "pd_min", "feasible"]);
    let risk: RiskBudget = config.risk()?;
    for &pf in &config.pf_grid {
        if !divergence_is_monotone(pf, 1000) {
            return Err(CliError::Numerical(format!("divergence is not increasing in p_d at p_f = {pf}")));
        }
    }
    for &mc in &config.mc_grid {
        for &pf in &config.pf_grid {
            match min_detection(pf, &risk, mc) {
                Ok(p) => table.push(vec![mc.to_string(), fmt(pf), fmt(p.p_d_min), "true".into()]),
                Err(Error::Infeasible { .. }) => table.push(vec![mc.to_string(), fmt(pf), String::new(), "false".into()]),
                Err(e) => return Err(e.into()),
            }
        }
    }
    Ok(table)
}

pub fn thresholds(config: &ExperimentConfig) -> Result<Table, CliError> {
    let mut table = Table::new(&["scheme", "qc", "mc", "cutoff_degree", "link_deletion_prob", "method", "tau"]);
    let model = match &config.histogram {
        Some(path) => DegreeModel::empirical(load_histogram(path)?, NetworkSize::Finite(config.n))?,
        None => configured_model(config)?,
    };
    let mut reports = vec![qc_random(&model)?];
    match qc_intentional_with(&model, &intentional_options(config)) {
        Ok(r) => reports.push(r),
        Err(Error::Unsupported(what)) => table.note("intentional", format!("unsupported: {what}")),
        Err(e) => return Err(e.into()),
    }
    for r in reports {
        table.push(vec![
            match r.scheme {
                percolation::ThresholdScheme::Random => "random".into(),
                percolation::ThresholdScheme::Intentional => "intentional".into(),
            },
            fmt(r.qc),
            r.removal_budget(config.n).to_string(),
            fmt_opt(r.cutoff_degree),
            fmt_opt(r.link_deletion_prob),
            match r.method {
                SolveMethod::ClosedForm => "closed-form".into(),
                SolveMethod::RootSolve => "root-solve".into(),
            },
            fmt(r.tau),
        ]);
    }
    Ok(table)
}

