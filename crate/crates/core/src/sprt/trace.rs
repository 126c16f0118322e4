use alloc::vec::Vec;

use super::{DetectorProfile, RiskBudget};
use crate::math::ln;
use crate::plan::AttackPlan;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decision {
    Continue,
    AcceptAttack,
    AcceptNull,
}

/// `(P(x_i = 1 | H1), P(x_i = 1 | H0))` for report `i` (1-based).
///
/// Targeted plans past `M` return `(P_F, P_F)` exactly, which makes `z_i`
/// vanish identically there.
pub fn report_probabilities(plan: &AttackPlan, detector: &DetectorProfile, i: u64) -> (f64, f64) {
    let p_f = detector.p_f();
    if plan.scheme().is_targeted() && i > plan.attacked_nodes() {
        return (p_f, p_f);
    }
    (plan.attack_probability(i, detector) * detector.p_d(), p_f)
}

/// Log-likelihood ratio `z_i = ln P(x_i | H1) / P(x_i | H0)`.
pub fn per_report_llr(x: bool, plan: &AttackPlan, detector: &DetectorProfile, i: u64) -> f64 {
    let (p1, p0) = report_probabilities(plan, detector, i);
    llr(x, p1, p0)
}

fn llr(x: bool, p1: f64, p0: f64) -> f64 {
    if p1 == p0 {
        0.0
    } else if x {
        ln(p1 / p0)
    } else {
        ln((1.0 - p1) / (1.0 - p0))
    }
}

/// Running sums `Lambda_1, .., Lambda_m` of a report sequence.
pub fn cumulative_llr(reports: &[bool], plan: &AttackPlan, detector: &DetectorProfile) -> Vec<f64> {
    let mut acc = 0.0;
    reports
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            acc += per_report_llr(x, plan, detector, i as u64 + 1);
            acc
        })
        .collect()
}

/// Forced decision once the report budget is exhausted: attack iff
/// `Lambda > 0`.
pub fn truncated_decision(llr: f64) -> Decision {
    if llr > 0.0 {
        Decision::AcceptAttack
    } else {
        Decision::AcceptNull
    }
}

/// The decision rule written as thresholds on the number of ones.
///
/// With `m` informative reports of which `d` are ones,
/// `Lambda = d D + m c` where `c = ln((1-p1)/(1-p0))` and
/// `D = ln(p1/p0) - c`, so `Lambda >= ln A` iff `d >= (ln A - m c) / D`
/// when `D > 0` (the inequality flips for `D < 0`).
pub fn threshold_decision(d: u64, m: u64, p1: f64, p0: f64, risk: &RiskBudget) -> Decision {
    if p1 == p0 {
        return Decision::Continue;
    }
    let c = ln((1.0 - p1) / (1.0 - p0));
    let slope = ln(p1 / p0) - c;
    let m = m as f64;
    let d = d as f64;
    let upper = (risk.log_a() - m * c) / slope;
    let lower = (risk.log_b() - m * c) / slope;
    let (attack, null) = if slope > 0.0 { (d >= upper, d <= lower) } else { (d <= upper, d >= lower) };
    if attack {
        Decision::AcceptAttack
    } else if null {
        Decision::AcceptNull
    } else {
        Decision::Continue
    }
}

fn lambda_decision(llr: f64, risk: &RiskBudget) -> Decision {
    if llr >= risk.log_a() {
        Decision::AcceptAttack
    } else if llr <= risk.log_b() {
        Decision::AcceptNull
    } else {
        Decision::Continue
    }
}

/// A running sequential test.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SprtTrace {
    reports: Vec<bool>,
    ones: u64,
    informative: u64,
    informative_ones: u64,
    llr: f64,
    state: Option<Decision>,
    stop_index: Option<usize>,
    truncated: bool,
}

impl SprtTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn reports(&self) -> &[bool] {
        &self.reports
    }

    pub fn len(&self) -> usize {
        self.reports.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reports.is_empty()
    }

    /// `d_m`, the number of ones received so far.
    pub fn ones(&self) -> u64 {
        self.ones
    }

    /// `Lambda_m`.
    pub fn llr(&self) -> f64 {
        self.llr
    }

    pub fn state(&self) -> Decision {
        self.state.unwrap_or(Decision::Continue)
    }

    pub fn stop_index(&self) -> Option<usize> {
        self.stop_index
    }

    pub fn was_truncated(&self) -> bool {
        self.truncated
    }

    /// Feeds the next report and applies Wald's thresholds.
    pub fn step(&mut self, x: bool, plan: &AttackPlan, detector: &DetectorProfile, risk: &RiskBudget) -> Result<Decision> {
        if let Some(stop_index) = self.stop_index {
            return Err(Error::AlreadyDecided { stop_index });
        }
        let i = self.reports.len() as u64 + 1;
        let (p1, p0) = report_probabilities(plan, detector, i);
        self.reports.push(x);
        self.ones += u64::from(x);
        if p1 != p0 {
            self.informative += 1;
            self.informative_ones += u64::from(x);
        }
        self.llr += llr(x, p1, p0);

        let decision = lambda_decision(self.llr, risk);
        debug_assert!(
            self.near_threshold(risk) || {
                let (q1, q0) = report_probabilities(plan, detector, 1);
                threshold_decision(self.informative_ones, self.informative, q1, q0, risk) == decision
            },
            "threshold form disagrees at report {i}"
        );
        if decision != Decision::Continue {
            self.state = Some(decision);
            self.stop_index = Some(self.reports.len());
        }
        Ok(decision)
    }

    fn near_threshold(&self, risk: &RiskBudget) -> bool {
        let tol = 1e-9 * (1.0 + self.llr.abs());
        (self.llr - risk.log_a()).abs() < tol || (self.llr - risk.log_b()).abs() < tol
    }

    /// Forces a decision after exactly `mc` undecided reports.
    pub fn truncate(&mut self, mc: usize) -> Result<Decision> {
        if mc < 1 {
            return Err(Error::InvalidParameter {
                name: "mc",
                value: mc as f64,
                reason: "truncation needs at least one report",
            });
        }
        if let Some(stop_index) = self.stop_index {
            return Err(Error::AlreadyDecided { stop_index });
        }
        if self.reports.len() != mc {
            return Err(Error::TruncationMismatch {
                mc,
                reports: self.reports.len(),
            });
        }
        let decision = truncated_decision(self.llr);
        self.state = Some(decision);
        self.stop_index = Some(mc);
        self.truncated = true;
        Ok(decision)
    }

    /// `Lambda_m` summed from scratch.
    pub fn recompute_llr(&self, plan: &AttackPlan, detector: &DetectorProfile) -> f64 {
        cumulative_llr(&self.reports, plan, detector).last().copied().unwrap_or(0.0)
    }
}
