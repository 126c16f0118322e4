use super::{DetectorProfile, RiskBudget};
use crate::plan::AttackPlan;
use crate::special::binary_kl;
use crate::{Error, Result};

/// Wald's approximation of the expected number of reports until an attack
/// is declared under `H1`, for random attack on a fraction `q`:
/// `(theta ln B + (1 - theta) ln A) / E[z | H1]`. Real valued.
pub fn expected_reports_random(q: f64, detector: &DetectorProfile, risk: &RiskBudget) -> Result<f64> {
    if !(q > 0.0 && q <= 1.0) {
        return Err(Error::InvalidParameter {
            name: "q",
            value: q,
            reason: "attacked fraction must lie in (0, 1]",
        });
    }
    wald_ratio(q * detector.p_d(), detector.p_f(), risk)
}

/// Same quantity for intentional attack; the first `M` reports all come
/// from attacked nodes, so it does not depend on `q`.
pub fn expected_reports_intentional(detector: &DetectorProfile, risk: &RiskBudget) -> Result<f64> {
    wald_ratio(detector.p_d(), detector.p_f(), risk)
}

pub fn expected_reports(plan: &AttackPlan, detector: &DetectorProfile, risk: &RiskBudget) -> Result<f64> {
    if plan.scheme().is_targeted() {
        expected_reports_intentional(detector, risk)
    } else {
        expected_reports_random(plan.q(), detector, risk)
    }
}

fn wald_ratio(p1: f64, p0: f64, risk: &RiskBudget) -> Result<f64> {
    if p1 == p0 {
        return Err(Error::IdenticalHypotheses { p_f: p0 });
    }
    Ok(risk.wald_numerator() / binary_kl(p1, p0))
}
