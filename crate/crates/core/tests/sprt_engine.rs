use proptest::prelude::*;
use seqdef_core::special::normal_cdf;
use seqdef_core::sprt::{
    cumulative_llr, expected_reports_random, per_report_llr, report_probabilities, run_detection_trial, sample_reports,
    simulate_detection, threshold_decision, worst_case_bounds, Decision, DetectorProfile, Hypothesis, RiskBudget, SprtTrace,
};
use seqdef_core::AttackPlan;

struct ExactRun {
    mean_stop: f64,
    p_attack: f64,
}

// Exact distribution of the truncated test for a random plan: after m
// reports the state is the number of ones d, Lambda = d z1 + (m - d) z0.
fn exact_random_test(p1: f64, p0: f64, truth_p: f64, risk: &RiskBudget, horizon: usize) -> ExactRun {
    let z1 = (p1 / p0).ln();
    let z0 = ((1.0 - p1) / (1.0 - p0)).ln();
    let mut alive = vec![1.0f64];
    let (mut mean_stop, mut p_attack) = (0.0, 0.0);
    for m in 1..=horizon {
        let mut next = vec![0.0; m + 1];
        for (d, &mass) in alive.iter().enumerate() {
            next[d + 1] += mass * truth_p;
            next[d] += mass * (1.0 - truth_p);
        }
        for (d, mass) in next.iter_mut().enumerate() {
            let llr = d as f64 * z1 + (m - d) as f64 * z0;
            if llr >= risk.log_a() {
                mean_stop += m as f64 * *mass;
                p_attack += *mass;
                *mass = 0.0;
            } else if llr <= risk.log_b() {
                mean_stop += m as f64 * *mass;
                *mass = 0.0;
            } else if m == horizon {
                mean_stop += m as f64 * *mass;
                if llr > 0.0 {
                    p_attack += *mass;
                }
            }
        }
        alive = next;
    }
    ExactRun { mean_stop, p_attack }
}

#[test]
fn simulated_stop_index_matches_exact_distribution() {
    let risk = RiskBudget::default();
    for &(q, pd, pf) in &[(0.5, 0.9, 0.001), (0.3, 0.5, 0.01), (0.8, 0.4, 0.05)] {
        let plan = AttackPlan::random(q, 10_000).unwrap();
        let det = DetectorProfile::new(pd, pf).unwrap();
        let trials = 10_000;
        let sim = simulate_detection(&plan, &det, &risk, Some(400), trials, 17, Hypothesis::Attack).unwrap();
        let exact = exact_random_test(q * pd, pf, q * pd, &risk, 400);
        // standard error from a second pass over the runs
        let stops: Vec<f64> = (0..trials)
            .map(|t| run_detection_trial(&plan, &det, &risk, 400, 17, t, Hypothesis::Attack).unwrap().stop_index as f64)
            .collect();
        let var = stops.iter().map(|s| (s - sim.mean_stop_index).powi(2)).sum::<f64>() / (trials - 1) as f64;
        let se = (var / trials as f64).sqrt();
        assert!((sim.mean_stop_index - exact.mean_stop).abs() < 4.0 * se, "{q} {pd} {pf}: {} vs {}", sim.mean_stop_index, exact.mean_stop);
        let p = exact.p_attack;
        let se_p = (p * (1.0 - p) / trials as f64).sqrt().max(1e-4);
        assert!((sim.accept_attack_frequency() - p).abs() < 4.0 * se_p);
    }
}

#[test]
fn simulated_stop_index_near_wald_approximation() {
    let risk = RiskBudget::default();
    let plan = AttackPlan::random(0.5, 10_000).unwrap();
    let det = DetectorProfile::new(0.9, 0.001).unwrap();
    let sim = simulate_detection(&plan, &det, &risk, None, 10_000, 1, Hypothesis::Attack).unwrap();
    let wald = expected_reports_random(0.5, &det, &risk).unwrap();
    let exact = exact_random_test(0.45, 0.001, 0.45, &risk, 10_000);
    // Wald's approximation ignores the overshoot, which dominates when a
    // single report nearly crosses ln A; the exact mean is the real target.
    assert!((exact.mean_stop - sim.mean_stop_index).abs() < 0.05);
    assert!(sim.mean_stop_index > wald);
}

#[test]
fn null_hypothesis_false_alarm_rate() {
    let risk = RiskBudget::default();
    let plan = AttackPlan::random(0.3, 10_000).unwrap();
    let det = DetectorProfile::new(0.5, 0.01).unwrap();
    let trials = 10_000;
    let sim = simulate_detection(&plan, &det, &risk, None, trials, 2, Hypothesis::Null).unwrap();
    let bound = risk.delta() / (1.0 - risk.theta());
    let se = (bound * (1.0 - bound) / trials as f64).sqrt();
    assert!(sim.accept_attack_frequency() <= bound + 3.0 * se);
}

#[test]
fn termination_frequency_respects_normal_bound() {
    let risk = RiskBudget::default();
    let det = DetectorProfile::new(0.5, 0.001).unwrap();
    let plan = AttackPlan::random(0.3, 10_000).unwrap();
    let trials = 10_000;
    let sim = simulate_detection(&plan, &det, &risk, Some(100), trials, 3, Hypothesis::Attack).unwrap();
    let b = worst_case_bounds(0.3, &det, &risk, 100).unwrap();
    let f = sim.attack_by_threshold_frequency();
    let se = (f * (1.0 - f) / trials as f64).sqrt();
    assert!(f >= b.accept_lower_bound - 3.0 * se, "{f} vs {}", b.accept_lower_bound);
}

#[test]
fn intentional_trace_is_frozen_after_m() {
    let det = DetectorProfile::new(0.6, 0.02).unwrap();
    let plan = AttackPlan::intentional(0.01, 2000).unwrap();
    let m = plan.attacked_nodes() as usize;
    for t in 0..1000 {
        let reports = sample_reports(&plan, &det, 3 * m as u64, 4, t, Hypothesis::Attack);
        let llr = cumulative_llr(&reports, &plan, &det);
        assert!(llr[m..].iter().all(|x| x.to_bits() == llr[m - 1].to_bits()));
    }
}

#[test]
fn wald_bounds_in_the_normal_tail() {
    let det = DetectorProfile::new(0.9, 0.001).unwrap();
    let b = worst_case_bounds(0.5, &det, &RiskBudget::default(), 20).unwrap();
    assert_eq!(b.accept_lower_bound, (1.0 - normal_cdf(b.y[0])).clamp(0.0, 1.0));
}

fn detector_and_plan() -> impl Strategy<Value = (DetectorProfile, AttackPlan, RiskBudget)> {
    (0.05f64..0.95, 0.001f64..0.5, 0.01f64..1.0, any::<bool>(), 0.001f64..0.2, 0.001f64..0.2).prop_filter_map(
        "p_d >= p_f",
        |(pd, pf, q, targeted, delta, theta)| {
            let det = DetectorProfile::new(pd, pf).ok()?;
            let plan = if targeted { AttackPlan::intentional(q, 200) } else { AttackPlan::random(q, 200) }.ok()?;
            Some((det, plan, RiskBudget::new(delta, theta).ok()?))
        },
    )
}

proptest! {
    #[test]
    fn llr_and_count_forms_agree((det, plan, risk) in detector_and_plan(), bits in proptest::collection::vec(any::<bool>(), 1..300)) {
        let mut trace = SprtTrace::new();
        let (mut d, mut m) = (0u64, 0u64);
        for (i, &x) in bits.iter().enumerate() {
            let idx = i as u64 + 1;
            let (p1, p0) = report_probabilities(&plan, &det, idx);
            if p1 != p0 {
                m += 1;
                d += u64::from(x);
            }
            let decision = trace.step(x, &plan, &det, &risk).unwrap();
            let (r1, r0) = report_probabilities(&plan, &det, 1);
            let other = threshold_decision(d, m, r1, r0, &risk);
            let margin = (trace.llr() - risk.log_a()).abs().min((trace.llr() - risk.log_b()).abs());
            if margin > 1e-9 {
                prop_assert_eq!(decision, other);
            }
            prop_assert!((trace.llr() - trace.recompute_llr(&plan, &det)).abs() < 1e-12);
            if decision != Decision::Continue {
                prop_assert_eq!(trace.stop_index(), Some(i + 1));
                break;
            }
        }
    }

    #[test]
    fn duality_of_thresholds(delta in 0.0001f64..0.4, theta in 0.0001f64..0.4, p1 in 0.01f64..0.99, p0 in 0.01f64..0.99) {
        let risk = RiskBudget::new(delta, theta).unwrap();
        let swapped = risk.swapped();
        prop_assert!((swapped.log_a() + risk.log_b()).abs() < 1e-12);
        prop_assert!((swapped.log_b() + risk.log_a()).abs() < 1e-12);
        // exchanging the hypotheses' report probabilities negates z
        let z = |a: f64, b: f64, x: bool| if x { (a / b).ln() } else { ((1.0 - a) / (1.0 - b)).ln() };
        for x in [false, true] {
            prop_assert!((z(p1, p0, x) + z(p0, p1, x)).abs() < 1e-12);
        }
    }

    #[test]
    fn expected_reports_decrease_in_q(pd in 0.05f64..0.99, pf in 0.0001f64..0.05, i in 0usize..99) {
        let det = DetectorProfile::new(pd, pf).unwrap();
        let risk = RiskBudget::default();
        let lo = pf / pd;
        prop_assume!(lo < 0.98);
        let q1 = lo + (1.0 - lo) * (i as f64 + 0.5) / 100.0;
        let q2 = lo + (1.0 - lo) * (i as f64 + 1.0) / 100.0;
        let (a, b) = (expected_reports_random(q1, &det, &risk).unwrap(), expected_reports_random(q2, &det, &risk).unwrap());
        prop_assert!(b < a);
    }

    #[test]
    fn silent_reports_past_m(pd in 0.05f64..0.99, pf in 0.0001f64..0.05, q in 0.01f64..0.5, extra in 1u64..100) {
        let det = DetectorProfile::new(pd, pf).unwrap();
        let plan = AttackPlan::intentional(q, 500).unwrap();
        let i = plan.attacked_nodes() + extra;
        prop_assert_eq!(per_report_llr(true, &plan, &det, i), 0.0);
        prop_assert_eq!(per_report_llr(false, &plan, &det, i), 0.0);
    }

    #[test]
    fn bound_probabilities_in_range(q in 0.01f64..1.0, pd in 0.05f64..0.99, pf in 0.0001f64..0.3, mc in 1u64..100_000) {
        prop_assume!(pd > pf);
        let det = DetectorProfile::new(pd, pf).unwrap();
        let risk = RiskBudget::default();
        if let Ok(b) = worst_case_bounds(q, &det, &risk, mc) {
            for p in [b.accept_lower_bound, b.reject_lower_bound, b.delta_at_mc, b.theta_at_mc] {
                prop_assert!((0.0..=1.0).contains(&p));
            }
            prop_assert!(normal_cdf(b.y[2]) >= normal_cdf(b.y[3]));
            prop_assert!(normal_cdf(b.y[4]) >= normal_cdf(b.y[5]));
        }
    }
}
