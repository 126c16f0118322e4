use super::{DetectorProfile, RiskBudget};
use crate::math::{ln, sqrt};
use crate::special::{binary_kl, normal_cdf};
use crate::{Error, Result};

/// Normal-approximation bounds for the test truncated at `M_c` reports.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WorstCaseBounds {
    pub mc: u64,
    /// `y_1 .. y_6`.
    pub y: [f64; 6],
    /// Lower bound on `P(declare attack within M_c | H1)`, `1 - Phi(y_1)`.
    pub accept_lower_bound: f64,
    /// Lower bound on `P(declare no attack within M_c | H0)`, `Phi(y_2)`.
    pub reject_lower_bound: f64,
    /// `delta + Phi(y_3) - Phi(y_4)`.
    pub delta_at_mc: f64,
    /// `theta + Phi(y_5) - Phi(y_6)`.
    pub theta_at_mc: f64,
    pub mean_z_h0: f64,
    pub mean_z_h1: f64,
    pub sigma_z_h0: f64,
    pub sigma_z_h1: f64,
}

/// Bounds for reports that come from attacked nodes with probability
/// `q_effective`. Random attack passes its `q`; targeted attacks pass 1
/// (every report up to `M = M_c` is from an attacked node).
pub fn worst_case_bounds(q_effective: f64, detector: &DetectorProfile, risk: &RiskBudget, mc: u64) -> Result<WorstCaseBounds> {
    if mc < 1 {
        return Err(Error::InvalidParameter {
            name: "mc",
            value: 0.0,
            reason: "truncation needs at least one report",
        });
    }
    if !(q_effective > 0.0 && q_effective <= 1.0) {
        return Err(Error::InvalidParameter {
            name: "q",
            value: q_effective,
            reason: "attacked fraction must lie in (0, 1]",
        });
    }
    let p1 = q_effective * detector.p_d();
    let p0 = detector.p_f();
    if p1 == p0 {
        return Err(Error::IdenticalHypotheses { p_f: p0 });
    }
    // z takes two values whose gap is |ln(p1 (1-p0) / (p0 (1-p1)))|
    let gap = ln(p1 * (1.0 - p0) / (p0 * (1.0 - p1))).abs();
    let mean_z_h1 = binary_kl(p1, p0);
    let mean_z_h0 = -binary_kl(p0, p1);
    let sigma_z_h1 = sqrt(p1 * (1.0 - p1)) * gap;
    let sigma_z_h0 = sqrt(p0 * (1.0 - p0)) * gap;

    let m = mc as f64;
    let root_m = sqrt(m);
    let (log_a, log_b) = (risk.log_a(), risk.log_b());
    let y = [
        (log_a - m * mean_z_h1) / (root_m * sigma_z_h1),
        (log_b - m * mean_z_h0) / (root_m * sigma_z_h0),
        (log_a - m * mean_z_h0) / (root_m * sigma_z_h0),
        -root_m * mean_z_h0 / sigma_z_h0,
        -root_m * mean_z_h1 / sigma_z_h1,
        (log_b - m * mean_z_h1) / (root_m * sigma_z_h1),
    ];
    let phi = y.map(normal_cdf);
    Ok(WorstCaseBounds {
        mc,
        y,
        accept_lower_bound: (1.0 - phi[0]).clamp(0.0, 1.0),
        reject_lower_bound: phi[1].clamp(0.0, 1.0),
        delta_at_mc: (risk.delta() + phi[2] - phi[3]).clamp(0.0, 1.0),
        theta_at_mc: (risk.theta() + phi[4] - phi[5]).clamp(0.0, 1.0),
        mean_z_h0,
        mean_z_h1,
        sigma_z_h0,
        sigma_z_h1,
    })
}
