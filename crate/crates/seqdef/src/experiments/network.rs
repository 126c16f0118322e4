use rayon::prelude::*;
use seqdef_core::graph::{
    curve_from_order, estimate_qc, generate, mean_curve, removal_order, removal_profile, NetworkGraph, RemovalCurve,
};
use seqdef_core::percolation::qc_random;
use seqdef_core::sprt::expected_reports_intentional;
use seqdef_core::AttackScheme;

use super::{configured_model, detector};
use crate::config::ExperimentConfig;
use crate::error::CliError;
use crate::io::load_edge_list;
use crate::output::{fmt, Table};

const SCHEMES: [AttackScheme; 3] = [AttackScheme::Random, AttackScheme::Intentional, AttackScheme::Betweenness];

/// Removal orders for `scheme`: `trials` seeded orders for random attack,
/// the single static order otherwise.
fn orders(graph: &NetworkGraph, scheme: AttackScheme, config: &ExperimentConfig) -> Result<Vec<Vec<u32>>, CliError> {
    if config.trials < 1 {
        return Err(CliError::config("trials must be at least 1"));
    }
    let runs = if scheme.is_targeted() { 1 } else { config.trials };
    Ok((0..runs)
        .into_par_iter()
        .map(|t| removal_order(graph, scheme, config.seed, t))
        .collect())
}

fn averaged_curve(graph: &NetworkGraph, orders: &[Vec<u32>], config: &ExperimentConfig) -> Result<RemovalCurve, CliError> {
    if !(config.q_max > 0.0 && config.q_max <= 1.0) {
        return Err(CliError::config("q_max must lie in (0, 1]"));
    }
    let curves = orders
        .par_iter()
        .map(|o| curve_from_order(graph, o, config.q_max, config.steps))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(mean_curve(&curves))
}

fn push_curve(table: &mut Table, scheme: AttackScheme, curve: &RemovalCurve, extra: usize) {
    for p in &curve.points {
        let mut row = vec![
            "curve".into(),
            scheme.name().into(),
            fmt(p.removed_fraction),
            p.removed_nodes.to_string(),
            fmt(p.largest_component_fraction),
            fmt(p.remaining_tau),
        ];
        row.extend(std::iter::repeat_n(String::new(), extra));
        table.push(row);
    }
}

const CURVE_COLUMNS: [&str; 6] = ["section", "scheme", "q", "removed_nodes", "lcc_fraction", "remaining_tau"];

/// Removal curves under all three attacks, plus the undetectable region
/// per detection probability: attacks on fewer than `M_1` nodes go
/// unnoticed, and the marker rows give the largest component left after
/// removing `ceil(M_1)` nodes.
pub fn powergrid(config: &ExperimentConfig) -> Result<Table, CliError> {
    let path = config
        .graph
        .as_ref()
        .ok_or_else(|| CliError::config("powergrid needs --graph PATH"))?;
    let list = load_edge_list(path)?;
    let graph = &list.graph;
    let n = graph.node_count();

    let mut table = Table::new(&[&CURVE_COLUMNS[..], &["pd", "pf", "m1", "undetectable_nodes"]].concat());
    table.note("nodes", n);
    table.note("edges", graph.edge_count());
    table.note("self_loops_dropped", list.report.self_loops);
    table.note("duplicates_dropped", list.report.duplicates);

    let risk = config.risk()?;
    for scheme in SCHEMES {
        let orders = orders(graph, scheme, config)?;
        let curve = averaged_curve(graph, &orders, config)?;
        push_curve(&mut table, scheme, &curve, 4);

        let profiles: Vec<Vec<u32>> = orders.par_iter().map(|o| removal_profile(graph, o).largest).collect();
        for &pd in &config.pd_grid {
            let m1 = expected_reports_intentional(&detector(pd, config.pf)?, &risk)?;
            let r = (m1.ceil() as usize).min(n);
            let lcc = profiles.iter().map(|p| f64::from(p[r])).sum::<f64>() / (profiles.len() * n) as f64;
            table.push(vec![
                "marker".into(),
                scheme.name().into(),
                fmt(r as f64 / n as f64),
                r.to_string(),
                fmt(lcc),
                String::new(),
                fmt(pd),
                fmt(config.pf),
                fmt(m1),
                // attacks on up to ceil(M_1) - 1 nodes stay below M_1
                r.saturating_sub(1).to_string(),
            ]);
        }
    }
    Ok(table)
}

/// Removal curve for the configured scheme on a loaded graph or one
/// generated from the configured model.
pub fn attack(config: &ExperimentConfig) -> Result<Table, CliError> {
    let mut table = Table::new(&CURVE_COLUMNS);
    let graph = match &config.graph {
        Some(path) => load_edge_list(path)?.graph,
        None => {
            let model = configured_model(config)?;
            let n = usize::try_from(config.n).map_err(|_| CliError::config("n too large"))?;
            let generated = generate(&model, n, config.seed)?;
            table.note("dropped_stubs", generated.dropped_stubs);
            match qc_random(&model) {
                Ok(r) => table.note("qc_random_analytic", fmt(r.qc)),
                Err(e) => table.note("qc_random_analytic", e),
            }
            generated.graph
        }
    };
    table.note("nodes", graph.node_count());
    table.note("edges", graph.edge_count());
    let estimate = estimate_qc(&graph, config.scheme, config.trials as usize, config.seed)?;
    table.note("qc_estimate", fmt(estimate.qc));

    let orders = orders(&graph, config.scheme, config)?;
    let curve = averaged_curve(&graph, &orders, config)?;
    push_curve(&mut table, config.scheme, &curve, 0);
    Ok(table)
}
