//! Detector requirements for a given disruption budget `M_c`.
//!
//! The defense is effective when the expected number of reports to flag an
//! attack stays within the budget, `M_1 <= M_c`. Intentional attack is the
//! binding case, which gives the operating condition
//! `D(P_D || P_F) >= (theta ln B + (1 - theta) ln A) / M_c`
//! with `D` the binary Kullback-Leibler divergence.

use crate::percolation::removal_budget;
use crate::roots::Bisection;
use crate::special::binary_kl;
use crate::sprt::{expected_reports_intentional, expected_reports_random, DetectorProfile, RiskBudget};
use crate::{Error, Result};

/// A point on the equality curve of the operating condition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperationPoint {
    pub p_f: f64,
    pub p_d_min: f64,
    pub mc: u64,
}

/// Left side of the operating condition, `D(P_D || P_F)`.
pub fn divergence(p_d: f64, p_f: f64) -> f64 {
    binary_kl(p_d, p_f)
}

/// Right side, the Wald numerator spread over `M_c` reports.
pub fn required_divergence(risk: &RiskBudget, mc: u64) -> f64 {
    risk.wald_numerator() / mc as f64
}

pub fn feasible(detector: &DetectorProfile, risk: &RiskBudget, mc: u64) -> bool {
    mc >= 1 && divergence(detector.p_d(), detector.p_f()) >= required_divergence(risk, mc)
}

/// Smallest `P_D` meeting the condition with equality at false-alarm rate
/// `p_f`. The divergence increases in `P_D` on `(P_F, 1)`, so bisection on
/// that interval is enough.
pub fn min_detection(p_f: f64, risk: &RiskBudget, mc: u64) -> Result<OperationPoint> {
    if !(p_f > 0.0 && p_f < 1.0) {
        return Err(Error::InvalidParameter {
            name: "p_f",
            value: p_f,
            reason: "must lie in (0, 1)",
        });
    }
    if mc < 1 {
        return Err(Error::InvalidParameter {
            name: "mc",
            value: 0.0,
            reason: "budget needs at least one report",
        });
    }
    let rhs = required_divergence(risk, mc);
    let best_lhs = divergence(1.0, p_f);
    if best_lhs < rhs {
        return Err(Error::Infeasible {
            mc: mc as f64,
            best_lhs,
            rhs,
        });
    }
    let root = Bisection::default().solve(|p_d| divergence(p_d, p_f) - rhs, p_f, 1.0)?;
    Ok(OperationPoint {
        p_f,
        p_d_min: root.x,
        mc,
    })
}

/// Checks that the divergence increases along `P_D` on a grid of `steps`
/// points in `(P_F, 1)`.
pub fn divergence_is_monotone(p_f: f64, steps: usize) -> bool {
    let mut prev = 0.0;
    (1..steps).all(|i| {
        let p_d = p_f + (1.0 - p_f) * i as f64 / steps as f64;
        let v = divergence(p_d, p_f);
        let ok = v > prev;
        prev = v;
        ok
    })
}

/// Composite check: the budget must cover both the random attack at its
/// critical fraction and the intentional attack.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BaselineCheck {
    pub m1_random: f64,
    pub m1_intentional: f64,
    pub required: f64,
    pub mc: u64,
    pub passes: bool,
}

pub fn baseline_check(qc_random: f64, detector: &DetectorProfile, risk: &RiskBudget, mc: u64) -> Result<BaselineCheck> {
    let m1_random = expected_reports_random(qc_random, detector, risk)?;
    let m1_intentional = expected_reports_intentional(detector, risk)?;
    let required = m1_random.max(m1_intentional);
    Ok(BaselineCheck {
        m1_random,
        m1_intentional,
        required,
        mc,
        passes: mc as f64 >= required,
    })
}

/// [`baseline_check`] with `M_c = ceil(N q_c)`.
pub fn baseline_check_for_network(qc_random: f64, n: u64, detector: &DetectorProfile, risk: &RiskBudget) -> Result<BaselineCheck> {
    baseline_check(qc_random, detector, risk, removal_budget(n, qc_random))
}
