//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
//! and exits non-zero if any fails.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::Instant;

use rayon::prelude::*;
use seqdef::io::load_edge_list;
use seqdef_core::degree::{DegreeModel, ModelFamily, NetworkSize};
use seqdef_core::design::{divergence, min_detection, required_divergence};
use seqdef_core::graph::{curve_from_order, estimate_qc, generate, mean_curve, removal_order};
use seqdef_core::percolation::{exponential_residual, qc_intentional, qc_random, removal_budget, ExponentialForm};
use seqdef_core::sprt::{
    cumulative_llr, expected_reports, run_detection_trial, sample_reports, worst_case_bounds, DetectionSummary,
    DetectorProfile, Hypothesis, RiskBudget,
};
use seqdef_core::{AttackPlan, AttackScheme};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, detail: String) -> Check {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn power_law(alpha: f64, n: u64) -> Result<DegreeModel, String> {
    DegreeModel::power_law(alpha)
        .and_then(|m| m.with_size(NetworkSize::Finite(n)))
        .map_err(fail)
}

fn c1_thresholds() -> Check {
    let www = qc_random(&power_law(2.1, 325_729)?).map_err(fail)?.qc;
    let internet = qc_random(&power_law(2.5, 6209)?).map_err(fail)?.qc;
    let (mc_www, mc_internet) = (removal_budget(325_729, www), removal_budget(6209, internet));
    let detail = format!("www qc={www:.5} Mc={mc_www}; internet qc={internet:.5} Mc={mc_internet} (want 6000 +- 1)");
    ensure(
        (www - 0.9909).abs() <= 1e-3
            && mc_www == 322_780
            && (internet - 0.9673).abs() <= 1e-3
            && mc_internet.abs_diff(6000) <= 1,
        detail,
    )
}

fn c2_er_closed_form() -> Check {
    let mut worst: f64 = 0.0;
    for k in [2.0, 4.0, 8.0] {
        let qc = qc_random(&DegreeModel::erdos_renyi(k).map_err(fail)?).map_err(fail)?.qc;
        worst = worst.max((qc - (1.0 - 1.0 / k)).abs());
    }
    ensure(worst <= 1e-12, format!("max error {worst:e}"))
}

fn c3_eu_grid() -> Check {
    let model = DegreeModel::exponential(1.63)
        .and_then(|m| m.with_size(NetworkSize::Finite(2783)))
        .map_err(fail)?;
    let qc = qc_random(&model).map_err(fail)?.qc;
    ensure((qc - 0.6212).abs() <= 1e-4, format!("qc={qc:.6}"))
}

fn c4_monte_carlo() -> Check {
    let n = 100_000;
    let pl = power_law(2.5, n as u64)?;
    let analytic = qc_random(&pl).map_err(fail)?.qc;
    let g = generate(&pl, n, 11).map_err(fail)?;
    let est_pl = estimate_qc(&g.graph, AttackScheme::Random, 5, 12).map_err(fail)?.qc;
    let er = DegreeModel::erdos_renyi(4.0)
        .and_then(|m| m.with_size(NetworkSize::Finite(n as u64)))
        .map_err(fail)?;
    let g = generate(&er, n, 13).map_err(fail)?;
    let est_er = estimate_qc(&g.graph, AttackScheme::Random, 5, 14).map_err(fail)?.qc;
    ensure(
        (est_pl - analytic).abs() <= 0.02 && (est_er - 0.75).abs() <= 0.02,
        format!("powerlaw {est_pl:.4} vs {analytic:.4}; er {est_er:.4} vs 0.75"),
    )
}

fn c5_intentional_roots() -> Check {
    let r = qc_intentional(&DegreeModel::power_law(2.5).map_err(fail)?).map_err(fail)?;
    let k = r.cutoff_degree.unwrap_or(f64::NAN);
    let x = (3.0 + 5f64.sqrt()).powi(2) / 4.0;
    let exp = qc_intentional(&DegreeModel::exponential(1.63).map_err(fail)?).map_err(fail)?;
    let res = exponential_residual(exp.qc, 1.63, 1.0, 1e-4, ExponentialForm::NegligibleMinDegree).abs();
    let mut ordered = true;
    for mean in [2.0, 3.0, 4.0] {
        for family in ModelFamily::ALL {
            let m = DegreeModel::matching_mean(family, mean, 1, 1000, NetworkSize::Finite(10_000)).map_err(fail)?;
            ordered &= qc_intentional(&m).map_err(fail)?.qc < qc_random(&m).map_err(fail)?.qc;
        }
    }
    ensure(
        (k - x).abs() < 1e-6 && (r.qc - 0.0557).abs() <= 1e-3 && res < 1e-10 && ordered,
        format!("k~={k:.6} (want {x:.6}), qc={:.5}, exp residual {res:e}, intentional<random: {ordered}", r.qc),
    )
}

fn summary(plan: &AttackPlan, det: &DetectorProfile, risk: &RiskBudget, horizon: u64, trials: u64, seed: u64, truth: Hypothesis) -> Result<DetectionSummary, String> {
    let runs = (0..trials)
        .into_par_iter()
        .map(|t| run_detection_trial(plan, det, risk, horizon, seed, t, truth))
        .collect::<Result<Vec<_>, _>>()
        .map_err(fail)?;
    Ok(DetectionSummary::from_runs(&runs))
}

fn c6_sprt_vs_formula() -> Check {
    let plan = AttackPlan::random(0.3, 10_000).map_err(fail)?;
    let det = DetectorProfile::new(0.5, 0.01).map_err(fail)?;
    let risk = RiskBudget::new(0.01, 0.001).map_err(fail)?;
    let trials = 10_000;
    let wald = expected_reports(&plan, &det, &risk).map_err(fail)?;
    let h1 = summary(&plan, &det, &risk, plan.n(), trials, 21, Hypothesis::Attack)?;
    let h0 = summary(&plan, &det, &risk, plan.n(), trials, 22, Hypothesis::Null)?;
    let rel = (h1.mean_stop_index - wald).abs() / wald;
    let bound = risk.delta() / (1.0 - risk.theta());
    let freq = h0.accept_attack_frequency();
    let limit = bound + 3.0 * (bound * (1.0 - bound) / trials as f64).sqrt();
    ensure(
        rel <= 0.15 && freq <= limit,
        format!(
            "H1 mean stop {:.3} vs formula {wald:.3} ({:+.1}%); H0 attack freq {freq:.4} <= {limit:.4}",
            h1.mean_stop_index,
            100.0 * (h1.mean_stop_index - wald) / wald
        ),
    )
}

fn c7_truncation_identity() -> Check {
    let plan = AttackPlan::intentional(0.01, 1000).map_err(fail)?;
    let det = DetectorProfile::new(0.5, 0.01).map_err(fail)?;
    let m = plan.attacked_nodes() as usize;
    let mut bad = 0;
    for t in 0..1000 {
        let reports = sample_reports(&plan, &det, 5 * m as u64, 31, t, Hypothesis::Attack);
        let llr = cumulative_llr(&reports, &plan, &det);
        bad += llr[m..].iter().filter(|v| v.to_bits() != llr[m - 1].to_bits()).count();
    }
    ensure(bad == 0, format!("M={m}, {bad} post-M values differ"))
}

fn c8_worst_case_sandwich() -> Check {
    let det = DetectorProfile::new(0.5, 0.01).map_err(fail)?;
    let risk = RiskBudget::default();
    let trials = 10_000u64;
    let mut worst = f64::INFINITY;
    let mut cells = Vec::new();
    for q in [0.1, 0.2, 0.3] {
        let plan = AttackPlan::random(q, 10_000).map_err(fail)?;
        for mc in [20, 50, 100] {
            let b = worst_case_bounds(q, &det, &risk, mc).map_err(fail)?;
            let s = summary(&plan, &det, &risk, mc, trials, 41, Hypothesis::Attack)?;
            let p = s.attack_by_threshold_frequency();
            let se = (b.accept_lower_bound * (1.0 - b.accept_lower_bound) / trials as f64)
                .sqrt()
                .max((p * (1.0 - p) / trials as f64).sqrt());
            let margin = p - (b.accept_lower_bound - 3.0 * se);
            worst = worst.min(margin);
            cells.push(format!("q={q},mc={mc}: {p:.3}>={:.3}", b.accept_lower_bound));
        }
    }
    ensure(worst >= 0.0, format!("min margin {worst:.4}; {}", cells.join(" ")))
}

fn powergrid_path() -> PathBuf {
    std::env::var_os("SEQDEF_POWERGRID")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/power-grid.edges"))
}

fn c9_power_grid() -> Check {
    let path = powergrid_path();
    let list = load_edge_list(&path).map_err(|e| format!("dataset unavailable: {e}"))?;
    let g = &list.graph;
    let (nodes, edges) = (g.node_count(), g.edge_count());
    let steps = 11;
    let curves = (0..100u64)
        .into_par_iter()
        .map(|t| curve_from_order(g, &removal_order(g, AttackScheme::Random, 51, t), 0.5, steps))
        .collect::<Result<Vec<_>, _>>()
        .map_err(fail)?;
    let random = mean_curve(&curves);
    let degree = curve_from_order(g, &removal_order(g, AttackScheme::Intentional, 51, 0), 0.5, steps).map_err(fail)?;
    let gap = random.points[1..]
        .iter()
        .zip(&degree.points[1..])
        .map(|(r, d)| r.largest_component_fraction - d.largest_component_fraction)
        .fold(f64::INFINITY, f64::min);
    ensure(
        nodes == 4941 && edges == 6594 && gap >= 0.02,
        format!("{nodes} nodes / {edges} edges; min random-degree LCC gap {gap:.4}"),
    )
}

fn c10_operation_curves() -> Check {
    let risk = RiskBudget::default();
    let pfs: Vec<f64> = (0..10).map(|i| 1e-4 * 10f64.powf(i as f64 / 3.0)).collect();
    let mcs: Vec<u64> = (0..10).map(|i| 5 * 2u64.pow(i)).collect();
    let mut grid = vec![vec![0.0; pfs.len()]; mcs.len()];
    let mut residual: f64 = 0.0;
    for (i, &mc) in mcs.iter().enumerate() {
        for (j, &pf) in pfs.iter().enumerate() {
            let p = min_detection(pf, &risk, mc).map_err(fail)?;
            residual = residual.max((divergence(p.p_d_min, pf) - required_divergence(&risk, mc)).abs());
            grid[i][j] = p.p_d_min;
        }
    }
    let in_mc = (1..mcs.len()).all(|i| (0..pfs.len()).all(|j| grid[i][j] <= grid[i - 1][j]));
    let in_pf = (0..mcs.len()).all(|i| (1..pfs.len()).all(|j| grid[i][j] >= grid[i][j - 1]));
    ensure(
        in_mc && in_pf && residual < 1e-10,
        format!("non-increasing in mc: {in_mc}, non-decreasing in pf: {in_pf}, max residual {residual:e}"),
    )
}

fn c11_determinism() -> Check {
    let dir = tempfile::tempdir().map_err(fail)?;
    let graph = dir.path().join("ring.edges");
    let text: String = (0..200).map(|i| format!("{i} {}\n{i} {}\n", (i + 1) % 200, (i * 7 + 3) % 200)).collect();
    std::fs::write(&graph, text).map_err(fail)?;
    let g = graph.to_str().unwrap_or_default().to_owned();
    let commands: Vec<Vec<&str>> = vec![
        vec!["qc-sweep"],
        vec!["m1"],
        vec!["worst-case"],
        vec!["empirical"],
        vec!["powergrid", "--graph", &g, "--trials", "20"],
        vec!["operation-curves"],
        vec!["detect", "--trials", "500"],
        vec!["attack", "--n", "3000", "--trials", "5"],
        vec!["thresholds"],
    ];
    for args in &commands {
        let mut outputs = Vec::new();
        for rep in 0..2 {
            let out = dir.path().join(format!("{}-{rep}.csv", args[0]));
            let status = Command::new(env!("CARGO_BIN_EXE_seqdef"))
                .args(args)
                .arg("--out")
                .arg(&out)
                .status()
                .map_err(fail)?;
            if !status.success() {
                return Err(format!("{args:?} exited with {status}"));
            }
            let text = std::fs::read_to_string(&out).map_err(fail)?;
            outputs.push(text.lines().filter(|l| !l.starts_with('#')).collect::<Vec<_>>().join("\n"));
        }
        if outputs[0] != outputs[1] {
            return Err(format!("{args:?} differs between runs"));
        }
    }
    Ok(format!("{} commands identical across reruns", commands.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("analytic thresholds (www, internet)", c1_thresholds),
        ("ER closed form", c2_er_closed_form),
        ("EU-grid exponential threshold", c3_eu_grid),
        ("Monte-Carlo vs analytic qc", c4_monte_carlo),
        ("intentional-attack roots", c5_intentional_roots),
        ("SPRT simulation vs formula", c6_sprt_vs_formula),
        ("intentional truncation identity", c7_truncation_identity),
        ("worst-case bound sandwich", c8_worst_case_sandwich),
        ("US power grid", c9_power_grid),
        ("robust-design monotonicity", c10_operation_curves),
        ("CLI determinism", c11_determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(d) => println!("PASS {:>2} {name}: {d} [{secs:.2}s]", i + 1),
            Err(d) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {d} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
