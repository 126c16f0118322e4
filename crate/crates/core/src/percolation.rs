//! Critical removal fractions `q_c` under random and intentional attack.
//!
//! Random attack thins every degree binomially, so the giant component
//! disappears when the thinned `tau` reaches 2: `q_c = 1 - 1/(tau_0 - 1)`.
//!
//! Intentional attack removes the highest-degree nodes. It is analyzed as a
//! new cutoff degree `k~` (nodes above it are gone) combined with an
//! equivalent random link deletion `q~` (links that pointed at removed
//! nodes). The threshold is the `q` at which the truncated distribution,
//! thinned by `q~`, reaches `tau = 2`.

use alloc::vec::Vec;

use crate::degree::{DegreeKind, DegreeModel};
use crate::math::{ceil, expm1, ln, powf, sqrt};
use crate::roots::Bisection;
use crate::special::poisson_pmf;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdScheme {
    Random,
    Intentional,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    ClosedForm,
    RootSolve,
}

/// Which form of the exponential-model link-deletion probability to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExponentialForm {
    /// Drops `k_min` against `beta` in `q~`: `q~ = u (1 - ln u)` with
    /// `u = q + 1/N`.
    #[default]
    NegligibleMinDegree,
    /// `q~ = u (k_min + beta (1 - ln u)) / (k_min + beta)`.
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalValueReport {
    pub qc: f64,
    pub scheme: ThresholdScheme,
    /// Cutoff degree `k~` at `qc` (intentional only), clamped to the support.
    pub cutoff_degree: Option<f64>,
    /// Equivalent link deletion probability `q~` at `qc` (intentional only).
    pub link_deletion_prob: Option<f64>,
    pub method: SolveMethod,
    /// `tau` of the intact network.
    pub tau: f64,
}

impl CriticalValueReport {
    /// Report budget `M_c = ceil(N q_c)`.
    pub fn removal_budget(&self, n: u64) -> u64 {
        removal_budget(n, self.qc)
    }
}

pub fn removal_budget(n: u64, qc: f64) -> u64 {
    ceil(n as f64 * qc) as u64
}

fn critical_tau(model: &DegreeModel) -> Result<f64> {
    let tau = model.moments().tau;
    if tau > 2.0 {
        Ok(tau)
    } else {
        Err(Error::AlreadyDisconnected { tau })
    }
}

pub fn qc_random(model: &DegreeModel) -> Result<CriticalValueReport> {
    let tau = critical_tau(model)?;
    let qc = match model.kind() {
        DegreeKind::ErdosRenyi { mean_degree } => 1.0 - 1.0 / mean_degree,
        _ => 1.0 - 1.0 / (tau - 1.0),
    };
    Ok(CriticalValueReport {
        qc: qc.clamp(0.0, 1.0),
        scheme: ThresholdScheme::Random,
        cutoff_degree: None,
        link_deletion_prob: None,
        method: SolveMethod::ClosedForm,
        tau,
    })
}

fn check_fraction(q: f64) -> Result<()> {
    if q > 0.0 && q < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name: "q",
            value: q,
            reason: "must lie in (0, 1)",
        })
    }
}

/// Cutoff degree `k~` after removing the top `q` fraction of nodes, i.e.
/// the solution of `int_{k~}^inf P(k) dk - 1/N = q`, clamped to
/// `[k_min, k_max]`.
pub fn cutoff_degree(model: &DegreeModel, q: f64) -> Result<f64> {
    check_fraction(q)?;
    let inv_n = model.size().inverse();
    let (lo, hi) = (f64::from(model.k_min()), f64::from(model.k_max()));
    if q + inv_n >= 1.0 {
        return Ok(lo);
    }
    let k = match model.kind() {
        DegreeKind::PowerLaw { exponent } => lo * powf(q + inv_n, 1.0 / (1.0 - exponent)),
        DegreeKind::Exponential { scale } => -scale * ln(q + inv_n) + lo,
        DegreeKind::ErdosRenyi { mean_degree } => PoissonLadder::new(*mean_degree, inv_n, model.k_max()).at(q).0,
        DegreeKind::Empirical(_) => return Err(Error::Unsupported("cutoff degree of an empirical model")),
    };
    Ok(k.clamp(lo, hi))
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct IntentionalOptions {
    pub exponential: ExponentialForm,
    pub solver: Bisection,
}

pub fn qc_intentional(model: &DegreeModel) -> Result<CriticalValueReport> {
    qc_intentional_with(model, &IntentionalOptions::default())
}

pub fn qc_intentional_with(model: &DegreeModel, opts: &IntentionalOptions) -> Result<CriticalValueReport> {
    let tau = critical_tau(model)?;
    let inv_n = model.size().inverse();
    let (lo, hi) = (f64::from(model.k_min()), f64::from(model.k_max()));
    let (qc, cutoff, q_tilde) = match model.kind() {
        DegreeKind::PowerLaw { exponent } => {
            let alpha = *exponent;
            let root = Bisection {
                max_expansions: 60,
                ..opts.solver
            }
            .solve(|x| power_law_residual(x, alpha, lo), 1.0, 2.0)?;
            let x = root.x;
            (powf(x, 1.0 - alpha), lo * x, powf(x, 2.0 - alpha))
        }
        DegreeKind::Exponential { scale } => {
            let beta = *scale;
            let upper = 1.0 - inv_n;
            let root = opts
                .solver
                .solve(|q| exponential_residual(q, beta, lo, inv_n, opts.exponential), 0.0, upper)?;
            let u = root.x + inv_n;
            (root.x, -beta * ln(u) + lo, 1.0 - 1.0 / (tau - 1.0))
        }
        DegreeKind::ErdosRenyi { mean_degree } => {
            let ladder = PoissonLadder::new(*mean_degree, inv_n, model.k_max());
            let target = 1.0 - 1.0 / mean_degree;
            let root = opts.solver.solve(|q| ladder.at(q).1 - target, 0.0, ladder.q[0])?;
            (root.x, ladder.at(root.x).0, target)
        }
        DegreeKind::Empirical(_) => {
            return Err(Error::Unsupported("intentional threshold needs a parametric model"));
        }
    };
    Ok(CriticalValueReport {
        qc: qc.clamp(0.0, 1.0),
        scheme: ThresholdScheme::Intentional,
        cutoff_degree: Some(cutoff.clamp(lo, hi)),
        link_deletion_prob: Some(q_tilde.clamp(0.0, 1.0)),
        method: SolveMethod::RootSolve,
        tau,
    })
}

/// `(x^s - 1) / s`, tending to `ln x` as `s -> 0`.
fn pow_minus_one_over(x: f64, s: f64) -> f64 {
    if s == 0.0 {
        ln(x)
    } else {
        expm1(s * ln(x)) / s
    }
}

/// Power-law intentional threshold condition in `x = k~ / k_min`:
/// `x^(2-a) - k_min (2-a)/(3-a) (x^(3-a) - 1) - 2`.
pub fn power_law_residual(x: f64, alpha: f64, k_min: f64) -> f64 {
    powf(x, 2.0 - alpha) - k_min * (2.0 - alpha) * pow_minus_one_over(x, 3.0 - alpha) - 2.0
}

/// Exponential intentional threshold condition:
/// `q~(u) + (k_min + beta) / (E[K^2] - E[K]) - 1` with `u = q + 1/N`.
pub fn exponential_residual(q: f64, beta: f64, k_min: f64, inv_n: f64, form: ExponentialForm) -> f64 {
    let u = q + inv_n;
    let mean = k_min + beta;
    let second = k_min * k_min + 2.0 * k_min * beta + 2.0 * beta * beta;
    let log_term = if u > 0.0 { 1.0 - ln(u) } else { 0.0 };
    let q_tilde = match form {
        ExponentialForm::NegligibleMinDegree => u * log_term,
        ExponentialForm::Exact => {
            if u > 0.0 {
                u * (k_min + beta * log_term) / mean
            } else {
                0.0
            }
        }
    };
    q_tilde + mean / (second - mean) - 1.0
}

/// Poisson tail quantities on the integer cutoffs `k = 0, 1, ..`, with
/// linear interpolation between neighbours.
///
/// `q[k] = P(K >= k) - 1/N` is the removed fraction when every node of
/// degree `>= k` is gone; `q_tilde[k] = q[k] - 1/N + P(K = k - 1)` is the
/// matching link deletion probability.
struct PoissonLadder {
    q: Vec<f64>,
    q_tilde: Vec<f64>,
}

impl PoissonLadder {
    fn new(mean: f64, inv_n: f64, k_max: u32) -> Self {
        // Far enough into the tail that the neglected mass is below 1e-300.
        let top = k_max.max(ceil(mean + 40.0 + 40.0 * sqrt(mean)) as u32);
        let pmf: Vec<f64> = (0..=top).map(|k| poisson_pmf(k, mean)).collect();
        let mut tail = alloc::vec![0.0; pmf.len()];
        let mut acc = 0.0;
        for k in (0..pmf.len()).rev() {
            acc += pmf[k];
            tail[k] = acc;
        }
        // P(K >= 0) is exactly 1.
        tail[0] = 1.0;
        let q: Vec<f64> = tail.iter().map(|t| t - inv_n).collect();
        let q_tilde = q
            .iter()
            .enumerate()
            .map(|(k, &qk)| qk - inv_n + if k == 0 { 0.0 } else { pmf[k - 1] })
            .collect();
        Self { q, q_tilde }
    }

    /// `(k~, q~)` at removed fraction `q`.
    fn at(&self, q: f64) -> (f64, f64) {
        let last = self.q.len() - 1;
        if q >= self.q[0] {
            return (0.0, self.q_tilde[0]);
        }
        if q <= self.q[last] {
            return (last as f64, self.q_tilde[last]);
        }
        // q[k] is decreasing; first k with q[k+1] <= q
        let k = self.q.partition_point(|&v| v > q) - 1;
        let t = (self.q[k] - q) / (self.q[k] - self.q[k + 1]);
        (k as f64 + t, self.q_tilde[k] + t * (self.q_tilde[k + 1] - self.q_tilde[k]))
    }
}
