use alloc::vec::Vec;

use rand::Rng;

use super::trace::{report_probabilities, truncated_decision, Decision, SprtTrace};
use super::{DetectorProfile, RiskBudget};
use crate::plan::AttackPlan;
use crate::rng::stream_rng;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Hypothesis {
    /// `H0`: no attack, every report is 1 with probability `P_F`.
    Null,
    /// `H1`: report `i` is 1 with probability `a_i P_D`.
    Attack,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetectionRun {
    pub decision: Decision,
    pub stop_index: u64,
    pub truncated: bool,
    pub llr: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DetectionSummary {
    pub trials: u64,
    pub mean_stop_index: f64,
    pub accept_attack: u64,
    pub accept_null: u64,
    pub truncated: u64,
    /// Runs that crossed `ln A` before the report budget ran out.
    pub attack_by_threshold: u64,
}

impl DetectionSummary {
    pub fn from_runs(runs: &[DetectionRun]) -> Self {
        let mut s = Self {
            trials: runs.len() as u64,
            ..Self::default()
        };
        let mut stop_sum = 0.0;
        for r in runs {
            stop_sum += r.stop_index as f64;
            match r.decision {
                Decision::AcceptAttack => s.accept_attack += 1,
                Decision::AcceptNull => s.accept_null += 1,
                Decision::Continue => {}
            }
            if r.truncated {
                s.truncated += 1;
            } else if r.decision == Decision::AcceptAttack {
                s.attack_by_threshold += 1;
            }
        }
        if !runs.is_empty() {
            s.mean_stop_index = stop_sum / runs.len() as f64;
        }
        s
    }

    pub fn accept_attack_frequency(&self) -> f64 {
        self.accept_attack as f64 / self.trials as f64
    }

    pub fn attack_by_threshold_frequency(&self) -> f64 {
        self.attack_by_threshold as f64 / self.trials as f64
    }
}

fn draw_report<R: Rng>(rng: &mut R, plan: &AttackPlan, detector: &DetectorProfile, i: u64, truth: Hypothesis) -> bool {
    let (p1, p0) = report_probabilities(plan, detector, i);
    let p = match truth {
        Hypothesis::Attack => p1,
        Hypothesis::Null => p0,
    };
    rng.gen::<f64>() < p
}

/// `len` reports drawn under `truth` from stream `trial` of `seed`.
pub fn sample_reports(
    plan: &AttackPlan,
    detector: &DetectorProfile,
    len: u64,
    seed: u64,
    trial: u64,
    truth: Hypothesis,
) -> Vec<bool> {
    let mut rng = stream_rng(seed, trial);
    (1..=len).map(|i| draw_report(&mut rng, plan, detector, i, truth)).collect()
}

/// One sequential test with report budget `horizon`.
///
/// For targeted plans nothing changes after report `M` (`z_i = 0`), so an
/// undecided test is truncated at `horizon` without drawing the remaining
/// reports.
pub fn run_detection_trial(
    plan: &AttackPlan,
    detector: &DetectorProfile,
    risk: &RiskBudget,
    horizon: u64,
    seed: u64,
    trial: u64,
    truth: Hypothesis,
) -> Result<DetectionRun> {
    if horizon < 1 {
        return Err(Error::InvalidParameter {
            name: "mc",
            value: 0.0,
            reason: "truncation needs at least one report",
        });
    }
    let mut rng = stream_rng(seed, trial);
    let mut trace = SprtTrace::new();
    let silent_from = if plan.scheme().is_targeted() {
        plan.attacked_nodes() + 1
    } else {
        u64::MAX
    };
    for i in 1..=horizon {
        if i >= silent_from {
            break;
        }
        let x = draw_report(&mut rng, plan, detector, i, truth);
        let decision = trace.step(x, plan, detector, risk)?;
        if decision != Decision::Continue {
            return Ok(DetectionRun {
                decision,
                stop_index: i,
                truncated: false,
                llr: trace.llr(),
            });
        }
    }
    Ok(DetectionRun {
        decision: truncated_decision(trace.llr()),
        stop_index: horizon,
        truncated: true,
        llr: trace.llr(),
    })
}

/// Monte-Carlo run of `trials` independent tests; trial `t` draws from
/// stream `t` of `seed`. The budget defaults to `N` reports.
pub fn simulate_detection(
    plan: &AttackPlan,
    detector: &DetectorProfile,
    risk: &RiskBudget,
    mc: Option<u64>,
    trials: u64,
    seed: u64,
    truth: Hypothesis,
) -> Result<DetectionSummary> {
    if trials < 1 {
        return Err(Error::InvalidParameter {
            name: "trials",
            value: 0.0,
            reason: "need at least one trial",
        });
    }
    let horizon = mc.unwrap_or(plan.n());
    let runs = (0..trials)
        .map(|t| run_detection_trial(plan, detector, risk, horizon, seed, t, truth))
        .collect::<Result<Vec<_>>>()?;
    Ok(DetectionSummary::from_runs(&runs))
}
