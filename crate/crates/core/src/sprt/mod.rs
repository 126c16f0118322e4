//! Sequential attack detection at the fusion center.
//!
//! Every node sends one bit: whether its local detector flags an attack.
//! Under `H1` (attack) report `i` is 1 with probability `a_i P_D`, under
//! `H0` with probability `P_F`. The fusion center accumulates the
//! log-likelihood ratio `Lambda_m = sum z_i` and stops at Wald's
//! thresholds `ln A = ln((1 - theta) / delta)` and
//! `ln B = ln(theta / (1 - delta))`, or is forced to decide when the report
//! budget `M_c` is exhausted.
//!
//! Reports are processed in attack order (descending degree for the
//! targeted schemes). Only the `a_i` sequence matters because detectors are
//! independent given `a_i`.

mod bounds;
mod detector;
mod expected;
mod simulate;
mod trace;

pub use bounds::{worst_case_bounds, WorstCaseBounds};
pub use detector::{DetectorProfile, RiskBudget};
pub use expected::{expected_reports, expected_reports_intentional, expected_reports_random};
pub use simulate::{run_detection_trial, sample_reports, simulate_detection, DetectionRun, DetectionSummary, Hypothesis};
pub use trace::{cumulative_llr, per_report_llr, report_probabilities, threshold_decision, truncated_decision, Decision, SprtTrace};
