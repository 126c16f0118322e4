mod common;

use common::{col, num, run};
use seqdef::Command;

#[test]
fn qc_sweep_rows() {
    let t = run(Command::QcSweep, &[]);
    assert_eq!(t.rows.len(), 3 * 11);
    for row in &t.rows {
        let (ran, int) = (num(&t, row, "qc_random"), num(&t, row, "qc_intentional"));
        assert!(int <= ran, "{row:?}");
        if col(&t, row, "model") == "er" && col(&t, row, "mean_degree") == "4.0" {
            assert!((ran - 0.75).abs() < 1e-12);
        }
        // the giant component is fragile near mean degree 1
        if col(&t, row, "mean_degree") == "1.05" {
            assert!(ran < 0.05, "{row:?}");
        }
    }
    // qc grows with the mean degree within each family
    for family in ["er", "powerlaw", "exponential"] {
        let qcs: Vec<f64> = t
            .rows
            .iter()
            .filter(|r| col(&t, r, "model") == family)
            .map(|r| num(&t, r, "qc_random"))
            .collect();
        assert!(qcs.windows(2).all(|w| w[0] <= w[1]), "{family}: {qcs:?}");
    }
}

#[test]
fn qc_sweep_blank_without_root() {
    let t = run(Command::QcSweep, &["mean_grid=8"]);
    let pl = t.rows.iter().find(|r| col(&t, r, "model") == "powerlaw").unwrap();
    assert_eq!(col(&t, pl, "qc_intentional"), "");
    assert!(t.notes.iter().any(|(k, _)| k == "qc_intentional_no_root"));
}

#[test]
fn m1_monotone_in_pd_and_pf() {
    let t = run(Command::M1, &["kind=random"]);
    let m1 = |q: &str, pd: &str, pf: &str| {
        let row = t
            .rows
            .iter()
            .find(|r| col(&t, r, "q") == q && col(&t, r, "pd") == pd && col(&t, r, "pf") == pf)
            .unwrap();
        num(&t, row, "m1")
    };
    let pds = ["0.1", "0.2", "0.3", "0.4", "0.5", "0.6", "0.7", "0.8", "0.9"];
    let pfs = ["0.0001", "0.0005", "0.001", "0.005", "0.01", "0.05"];
    for q in ["0.5", "1.0"] {
        for pf in pfs {
            let v: Vec<f64> = pds.iter().map(|pd| m1(q, pd, pf)).collect();
            assert!(v.windows(2).all(|w| w[1] < w[0]), "q {q} pf {pf}: {v:?}");
        }
        for pd in pds {
            let v: Vec<f64> = pfs.iter().map(|pf| m1(q, pd, pf)).collect();
            assert!(v.windows(2).all(|w| w[1] > w[0]), "q {q} pd {pd}: {v:?}");
        }
    }
}

#[test]
fn m1_intentional_matches_formula() {
    let t = run(Command::M1, &["kind=intentional", "delta=0.02", "theta=0.005"]);
    assert_eq!(t.rows.len(), 9 * 6);
    for row in &t.rows {
        let (pd, pf) = (num(&t, row, "pd"), num(&t, row, "pf"));
        let log_a = ((1.0 - 0.005) / 0.02f64).ln();
        let log_b = (0.005 / (1.0 - 0.02f64)).ln();
        let kl = pd * (pd / pf).ln() + (1.0 - pd) * ((1.0 - pd) / (1.0 - pf)).ln();
        let expected = (0.005 * log_b + 0.995 * log_a) / kl;
        assert!((num(&t, row, "m1") - expected).abs() <= 1e-9 * expected);
    }
}

#[test]
fn m1_surfaces() {
    let t = run(Command::M1, &["kind=surface", "pd_grid=0.3,0.6,0.9"]);
    assert_eq!(t.rows.len(), (14 + 11 + 13) * 3);
    // larger khat and beta need fewer reports; larger alpha needs more
    for (model, grows) in [("er", false), ("exponential", false), ("powerlaw", true)] {
        let v: Vec<f64> = t
            .rows
            .iter()
            .filter(|r| col(&t, r, "model") == model && col(&t, r, "pd") == "0.6")
            .map(|r| num(&t, r, "m1"))
            .collect();
        let ok = v.windows(2).all(|w| if grows { w[1] >= w[0] } else { w[1] <= w[0] });
        assert!(ok, "{model}: {v:?}");
    }
}

#[test]
fn worst_case_trends() {
    let t = run(Command::WorstCase, &["pd_grid=0.9", "pf=0.001"]);
    for row in &t.rows {
        for c in ["accept_lower_bound", "reject_lower_bound", "delta_at_mc", "theta_at_mc"] {
            let v = num(&t, row, c);
            assert!((0.0..=1.0).contains(&v), "{c} = {v}");
        }
    }
    let random: Vec<&Vec<String>> = t.rows.iter().filter(|r| col(&t, r, "scheme") == "random").collect();
    let last = random.last().unwrap();
    assert!(num(&t, last, "accept_lower_bound") > 0.999);
    assert!((num(&t, last, "delta_at_mc") - 0.01).abs() < 1e-6);
    assert!((num(&t, last, "theta_at_mc") - 0.001).abs() < 1e-6);
    let accept: Vec<f64> = random.iter().map(|r| num(&t, r, "accept_lower_bound")).collect();
    assert!(accept.windows(2).all(|w| w[1] >= w[0] - 1e-12), "{accept:?}");
}

#[test]
fn empirical_values() {
    let t = run(Command::Empirical, &[]);
    let first = |name: &str| t.rows.iter().find(|r| col(&t, r, "network") == name).unwrap();
    let www = first("www");
    assert!((num(&t, www, "qc_random") - 0.9909).abs() < 1e-3);
    assert_eq!(col(&t, www, "mc"), "322780");
    let internet = first("internet");
    assert!((num(&t, internet, "qc_random") - 0.9673).abs() < 1e-3);
    let eu = first("eu-grid");
    assert!((num(&t, eu, "qc_random") - 0.6212).abs() < 1e-4);
    for row in &t.rows {
        if num(&t, row, "pd") >= 0.1 && num(&t, row, "pf") <= 0.01 {
            assert_eq!(col(&t, row, "m1_random_below_mc"), "true", "{row:?}");
        }
    }
}

#[test]
fn operation_curves_ordering() {
    let t = run(Command::OperationCurves, &["mc_grid=5,50,500", "pf_grid=0.001,0.01,0.1"]);
    assert_eq!(t.rows.len(), 9);
    let pd = |mc: &str, pf: &str| {
        let r = t.rows.iter().find(|r| col(&t, r, "mc") == mc && col(&t, r, "pf") == pf).unwrap();
        num(&t, r, "pd_min")
    };
    for pf in ["0.001", "0.01", "0.1"] {
        assert!(pd("5", pf) >= pd("50", pf) && pd("50", pf) >= pd("500", pf));
    }
    for mc in ["5", "50", "500"] {
        assert!(pd(mc, "0.001") <= pd(mc, "0.01") && pd(mc, "0.01") <= pd(mc, "0.1"));
    }
}

#[test]
fn operation_curves_infeasible_rows() {
    let t = run(Command::OperationCurves, &["mc_grid=1", "pf_grid=0.5"]);
    assert_eq!(t.rows, vec![vec!["1".to_string(), "0.5".into(), String::new(), "false".into()]]);
}

#[test]
fn thresholds_er() {
    let t = run(Command::Thresholds, &["model=er", "khat=4"]);
    assert_eq!(num(&t, &t.rows[0], "qc"), 0.75);
    assert_eq!(col(&t, &t.rows[0], "mc"), "7500");
    assert!(num(&t, &t.rows[1], "qc") < 0.75);
}

#[test]
fn detect_summary() {
    let t = run(Command::Detect, &["scheme=degree", "q=0.01", "n=1000", "pd=0.5", "pf=0.01", "trials=500", "mc=10"]);
    let row = &t.rows[0];
    assert_eq!(col(&t, row, "attacked_nodes"), "10");
    assert_eq!(col(&t, row, "horizon"), "10");
    let f = num(&t, row, "accept_attack_freq") + num(&t, row, "accept_null_freq");
    assert!((f - 1.0).abs() < 1e-12);
    assert!(num(&t, row, "mean_stop_index") <= 10.0);
    assert!(!col(&t, row, "accept_lower_bound").is_empty());
}

#[test]
fn attack_on_generated_er() {
    let t = run(Command::Attack, &["model=er", "khat=4", "n=20000", "trials=3", "q_max=0.9", "steps=10"]);
    let est: f64 = t.notes.iter().find(|(k, _)| k == "qc_estimate").unwrap().1.parse().unwrap();
    assert!((est - 0.75).abs() < 0.03, "{est}");
    let lcc: Vec<f64> = t.rows.iter().map(|r| num(&t, r, "lcc_fraction")).collect();
    assert!(lcc.windows(2).all(|w| w[1] <= w[0]));
    assert_eq!(num(&t, &t.rows[0], "removed_nodes"), 0.0);
}
