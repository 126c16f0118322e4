//! Degree distributions of the canonical network models.
//!
//! The analytic side works with the continuous approximation of the
//! distributions (power-law moments integrate `c1 k^-alpha` over
//! `[k_min, k_max]`, the exponential model uses its large-`k_max` limit).
//! Sampling uses the discrete distribution obtained by normalizing `P(k)`
//! over the integers of the support, so generated graphs are realizable.

use alloc::format;
use alloc::vec::Vec;

use rand::Rng;

use crate::math::{exp, expm1, ln, powf};
use crate::rng::{stream_rng, STREAM_DEGREES};
use crate::roots::Bisection;
use crate::special::poisson_pmf;
use crate::{Error, Result};

pub const DEFAULT_K_MIN: u32 = 1;
pub const DEFAULT_K_MAX: u32 = 1000;
pub const DEFAULT_NODES: u64 = 10_000;

/// Tolerance on the total mass of an empirical histogram.
pub const HISTOGRAM_MASS_TOL: f64 = 1e-9;

/// Number of nodes `N`. `Unbounded` is the `N -> infinity` limit in which
/// the `1/N` corrections of the cutoff-degree relation vanish.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NetworkSize {
    Finite(u64),
    Unbounded,
}

impl NetworkSize {
    /// `1/N`, or zero for the unbounded limit.
    pub fn inverse(self) -> f64 {
        match self {
            NetworkSize::Finite(n) => 1.0 / n as f64,
            NetworkSize::Unbounded => 0.0,
        }
    }

    pub fn nodes(self) -> Option<u64> {
        match self {
            NetworkSize::Finite(n) => Some(n),
            NetworkSize::Unbounded => None,
        }
    }
}

/// Degree -> probability table, sorted by degree.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeHistogram {
    entries: Vec<(u32, f64)>,
}

impl DegreeHistogram {
    pub fn new(mut entries: Vec<(u32, f64)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidHistogram("empty histogram".into()));
        }
        entries.sort_by_key(|&(k, _)| k);
        let mut total = 0.0;
        for (i, &(k, p)) in entries.iter().enumerate() {
            if k == 0 {
                return Err(Error::InvalidHistogram("degree 0 is outside the support (k >= 1)".into()));
            }
            if !(p.is_finite() && p >= 0.0) {
                return Err(Error::InvalidHistogram(format!("probability {p} for degree {k}")));
            }
            if i > 0 && entries[i - 1].0 == k {
                return Err(Error::InvalidHistogram(format!("degree {k} listed twice")));
            }
            total += p;
        }
        if (total - 1.0).abs() > HISTOGRAM_MASS_TOL {
            return Err(Error::InvalidHistogram(format!("probabilities sum to {total}")));
        }
        entries.retain(|&(_, p)| p > 0.0);
        Ok(Self { entries })
    }

    /// Histogram of an observed degree sequence. Isolated nodes (degree 0)
    /// are outside the model support and are skipped.
    pub fn from_degree_sequence(degrees: &[u32]) -> Result<Self> {
        let mut sorted: Vec<u32> = degrees.iter().copied().filter(|&k| k > 0).collect();
        if sorted.is_empty() {
            return Err(Error::InvalidHistogram("no node with positive degree".into()));
        }
        sorted.sort_unstable();
        let total = sorted.len() as f64;
        let mut entries: Vec<(u32, f64)> = Vec::new();
        let mut run_start = 0;
        for i in 1..=sorted.len() {
            if i == sorted.len() || sorted[i] != sorted[run_start] {
                entries.push((sorted[run_start], (i - run_start) as f64 / total));
                run_start = i;
            }
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[(u32, f64)] {
        &self.entries
    }

    pub fn min_degree(&self) -> u32 {
        self.entries[0].0
    }

    pub fn max_degree(&self) -> u32 {
        self.entries[self.entries.len() - 1].0
    }

    fn moments(&self) -> MomentSummary {
        let (mut m1, mut m2) = (0.0, 0.0);
        for &(k, p) in &self.entries {
            let k = f64::from(k);
            m1 += p * k;
            m2 += p * k * k;
        }
        MomentSummary::from_raw(m1, m2)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum DegreeKind {
    /// Poisson degrees with mean `k_hat`.
    ErdosRenyi { mean_degree: f64 },
    /// `P(k) ~ k^-alpha`, `alpha > 1`.
    PowerLaw { exponent: f64 },
    /// `P(k) ~ e^{-k/beta} / beta`, `beta > 0`.
    Exponential { scale: f64 },
    Empirical(DegreeHistogram),
}

/// The three parametric families, used when matching models by mean degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModelFamily {
    ErdosRenyi,
    PowerLaw,
    Exponential,
}

impl ModelFamily {
    pub const ALL: [ModelFamily; 3] = [ModelFamily::ErdosRenyi, ModelFamily::PowerLaw, ModelFamily::Exponential];

    pub fn name(self) -> &'static str {
        match self {
            ModelFamily::ErdosRenyi => "er",
            ModelFamily::PowerLaw => "powerlaw",
            ModelFamily::Exponential => "exponential",
        }
    }
}

/// `E[K]`, `E[K^2]` and the Molloy-Reed ratio `tau = E[K^2] / E[K]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentSummary {
    pub mean_degree: f64,
    pub second_moment: f64,
    pub tau: f64,
}

impl MomentSummary {
    /// Builds the summary from raw moments; `tau` is reported as 0 for an
    /// empty network.
    pub fn from_raw(mean_degree: f64, second_moment: f64) -> Self {
        let tau = if mean_degree > 0.0 { second_moment / mean_degree } else { 0.0 };
        Self {
            mean_degree,
            second_moment,
            tau,
        }
    }

    /// Moments after removing each node independently with probability `q`
    /// (binomial thinning of every degree):
    /// `E[K'] = (1-q) E[K]`, `E[K'^2] = (1-q)^2 E[K^2] + q (1-q) E[K]`.
    pub fn thinned(&self, q: f64) -> Self {
        let keep = 1.0 - q;
        let m1 = keep * self.mean_degree;
        let m2 = keep * keep * self.second_moment + q * keep * self.mean_degree;
        if q >= 1.0 {
            return Self::from_raw(0.0, 0.0);
        }
        Self::from_raw(m1, m2)
    }

    /// Molloy-Reed criterion `tau > 2`.
    pub fn has_giant_component(&self) -> bool {
        self.tau > 2.0
    }
}

/// A degree distribution together with its support `[k_min, k_max]` and the
/// network size `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeModel {
    kind: DegreeKind,
    k_min: u32,
    k_max: u32,
    size: NetworkSize,
}

fn check_positive(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be finite and > 0",
        })
    }
}

/// `int_a^b k^(s-1) dk`, with the logarithmic limit at `s = 0`.
///
/// Written as `a^s expm1(s ln(b/a)) / s` so it stays accurate as `s`
/// approaches 0 from either side.
fn power_integral(a: f64, b: f64, s: f64) -> f64 {
    let span = ln(b / a);
    if s == 0.0 {
        span
    } else {
        powf(a, s) * expm1(s * span) / s
    }
}

impl DegreeModel {
    pub fn new(kind: DegreeKind, k_min: u32, k_max: u32, size: NetworkSize) -> Result<Self> {
        if k_min < 1 {
            return Err(Error::InvalidParameter {
                name: "k_min",
                value: f64::from(k_min),
                reason: "must be >= 1",
            });
        }
        if k_max < k_min {
            return Err(Error::DegenerateSupport { k_min, k_max });
        }
        if let NetworkSize::Finite(n) = size {
            if n < 2 {
                return Err(Error::InvalidParameter {
                    name: "n",
                    value: n as f64,
                    reason: "network needs at least 2 nodes",
                });
            }
        }
        match &kind {
            DegreeKind::ErdosRenyi { mean_degree } => check_positive("k_hat", *mean_degree)?,
            DegreeKind::PowerLaw { exponent } => {
                if !(exponent.is_finite() && *exponent > 1.0) {
                    return Err(Error::InvalidParameter {
                        name: "alpha",
                        value: *exponent,
                        reason: "must be finite and > 1",
                    });
                }
            }
            DegreeKind::Exponential { scale } => check_positive("beta", *scale)?,
            DegreeKind::Empirical(hist) => {
                if hist.min_degree() < k_min || hist.max_degree() > k_max {
                    return Err(Error::InvalidHistogram(format!(
                        "support [{}, {}] outside [{k_min}, {k_max}]",
                        hist.min_degree(),
                        hist.max_degree()
                    )));
                }
            }
        }
        if k_min == k_max && !matches!(kind, DegreeKind::Empirical(_)) {
            return Err(Error::DegenerateSupport { k_min, k_max });
        }
        Ok(Self { kind, k_min, k_max, size })
    }

    /// ER model with the default support and size.
    pub fn erdos_renyi(mean_degree: f64) -> Result<Self> {
        Self::with_defaults(DegreeKind::ErdosRenyi { mean_degree })
    }

    pub fn power_law(exponent: f64) -> Result<Self> {
        Self::with_defaults(DegreeKind::PowerLaw { exponent })
    }

    pub fn exponential(scale: f64) -> Result<Self> {
        Self::with_defaults(DegreeKind::Exponential { scale })
    }

    /// Empirical model whose support is the histogram's own degree range.
    pub fn empirical(hist: DegreeHistogram, size: NetworkSize) -> Result<Self> {
        let (lo, hi) = (hist.min_degree(), hist.max_degree());
        Self::new(DegreeKind::Empirical(hist), lo, hi, size)
    }

    fn with_defaults(kind: DegreeKind) -> Result<Self> {
        Self::new(kind, DEFAULT_K_MIN, DEFAULT_K_MAX, NetworkSize::Finite(DEFAULT_NODES))
    }

    pub fn with_support(self, k_min: u32, k_max: u32) -> Result<Self> {
        Self::new(self.kind, k_min, k_max, self.size)
    }

    pub fn with_size(self, size: NetworkSize) -> Result<Self> {
        Self::new(self.kind, self.k_min, self.k_max, size)
    }

    /// Model of `family` whose mean degree equals `mean_degree` on the
    /// given support: `k_hat = mean` for ER, `beta = mean - k_min` for the
    /// exponential model, and the exponent solving `E[K](alpha) = mean`
    /// for the power law.
    pub fn matching_mean(
        family: ModelFamily,
        mean_degree: f64,
        k_min: u32,
        k_max: u32,
        size: NetworkSize,
    ) -> Result<Self> {
        check_positive("mean_degree", mean_degree)?;
        let kind = match family {
            ModelFamily::ErdosRenyi => DegreeKind::ErdosRenyi { mean_degree },
            ModelFamily::Exponential => DegreeKind::Exponential {
                scale: mean_degree - f64::from(k_min),
            },
            ModelFamily::PowerLaw => {
                let (a, b) = (f64::from(k_min), f64::from(k_max));
                let mean_at = |alpha: f64| power_integral(a, b, 2.0 - alpha) / power_integral(a, b, 1.0 - alpha);
                let root = Bisection::default().solve(|alpha| mean_at(alpha) - mean_degree, 1.0 + 1e-9, 200.0)?;
                DegreeKind::PowerLaw { exponent: root.x }
            }
        };
        Self::new(kind, k_min, k_max, size)
    }

    pub fn kind(&self) -> &DegreeKind {
        &self.kind
    }

    pub fn k_min(&self) -> u32 {
        self.k_min
    }

    pub fn k_max(&self) -> u32 {
        self.k_max
    }

    pub fn size(&self) -> NetworkSize {
        self.size
    }

    /// Normalization constant of the continuous density: `c1` for the power
    /// law, `c2 = e^{k_min/beta}` (large-`k_max` limit) for the exponential
    /// model. `None` for the discrete kinds.
    pub fn normalization(&self) -> Option<f64> {
        let (a, b) = (f64::from(self.k_min), f64::from(self.k_max));
        match self.kind {
            DegreeKind::PowerLaw { exponent } => Some(1.0 / power_integral(a, b, 1.0 - exponent)),
            DegreeKind::Exponential { scale } => Some(exp(a / scale)),
            _ => None,
        }
    }

    /// Continuous density `P(k)` for the power-law and exponential models.
    pub fn density(&self, k: f64) -> Option<f64> {
        let c = self.normalization()?;
        match self.kind {
            DegreeKind::PowerLaw { exponent } => Some(c * powf(k, -exponent)),
            DegreeKind::Exponential { scale } => Some(c * exp(-k / scale) / scale),
            _ => None,
        }
    }

    pub fn moments(&self) -> MomentSummary {
        let (a, b) = (f64::from(self.k_min), f64::from(self.k_max));
        match &self.kind {
            DegreeKind::ErdosRenyi { mean_degree } => {
                let k = *mean_degree;
                MomentSummary::from_raw(k, k * k + k)
            }
            DegreeKind::PowerLaw { exponent } => {
                let c1 = 1.0 / power_integral(a, b, 1.0 - exponent);
                MomentSummary::from_raw(c1 * power_integral(a, b, 2.0 - exponent), c1 * power_integral(a, b, 3.0 - exponent))
            }
            DegreeKind::Exponential { scale } => {
                let beta = *scale;
                MomentSummary::from_raw(a + beta, a * a + 2.0 * a * beta + 2.0 * beta * beta)
            }
            DegreeKind::Empirical(hist) => hist.moments(),
        }
    }

    pub fn giant_component_exists(&self) -> bool {
        self.moments().has_giant_component()
    }

    /// Moments after random removal of a fraction `q` of the nodes.
    pub fn thin(&self, q: f64) -> Result<MomentSummary> {
        if !(0.0..=1.0).contains(&q) {
            return Err(Error::InvalidParameter {
                name: "q",
                value: q,
                reason: "must lie in [0, 1]",
            });
        }
        Ok(self.moments().thinned(q))
    }

    /// The integer-valued distribution used for sampling.
    ///
    /// Power-law and exponential masses are `P(k)` normalized over
    /// `k_min..=k_max`. ER keeps the Poisson mass at `k = 0` (so the sample
    /// mean matches `k_hat`) and truncates above `k_max`.
    pub fn discretize(&self) -> DiscreteDegrees {
        let weights: Vec<(u32, f64)> = match &self.kind {
            DegreeKind::ErdosRenyi { mean_degree } => (0..=self.k_max).map(|k| (k, poisson_pmf(k, *mean_degree))).collect(),
            DegreeKind::PowerLaw { exponent } => (self.k_min..=self.k_max)
                .map(|k| (k, powf(f64::from(k) / f64::from(self.k_min), -exponent)))
                .collect(),
            DegreeKind::Exponential { scale } => (self.k_min..=self.k_max)
                .map(|k| (k, exp(-f64::from(k - self.k_min) / scale)))
                .collect(),
            DegreeKind::Empirical(hist) => hist.entries.clone(),
        };
        DiscreteDegrees::from_weights(weights)
    }

    /// `n` i.i.d. degrees from [`discretize`](Self::discretize). If the sum
    /// is odd the last entry is redrawn until the parity flips. The result
    /// depends only on `(model, n, seed)`.
    pub fn sample_degree_sequence(&self, n: usize, seed: u64) -> Result<Vec<u32>> {
        if n < 2 {
            return Err(Error::InvalidParameter {
                name: "n",
                value: n as f64,
                reason: "need at least 2 degrees",
            });
        }
        let dist = self.discretize();
        let mut rng = stream_rng(seed, STREAM_DEGREES);
        let mut degrees: Vec<u32> = (0..n).map(|_| dist.sample(&mut rng)).collect();
        let odd = degrees.iter().fold(0u32, |acc, &k| acc ^ (k & 1)) == 1;
        if odd {
            if !dist.has_both_parities() {
                return Err(Error::ParityUnfixable);
            }
            let last = degrees[n - 1] & 1;
            loop {
                let k = dist.sample(&mut rng);
                if k & 1 != last {
                    degrees[n - 1] = k;
                    break;
                }
            }
        }
        Ok(degrees)
    }
}

/// Normalized integer degree distribution with a cumulative table for
/// inverse-CDF sampling.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteDegrees {
    masses: Vec<(u32, f64)>,
    cdf: Vec<f64>,
}

impl DiscreteDegrees {
    fn from_weights(weights: Vec<(u32, f64)>) -> Self {
        let total: f64 = weights.iter().map(|&(_, w)| w).sum();
        let masses: Vec<(u32, f64)> = weights.into_iter().map(|(k, w)| (k, w / total)).collect();
        let mut acc = 0.0;
        let mut cdf: Vec<f64> = masses
            .iter()
            .map(|&(_, p)| {
                acc += p;
                acc
            })
            .collect();
        if let Some(last) = cdf.last_mut() {
            *last = 1.0;
        }
        Self { masses, cdf }
    }

    pub fn masses(&self) -> &[(u32, f64)] {
        &self.masses
    }

    pub fn total_mass(&self) -> f64 {
        self.masses.iter().map(|&(_, p)| p).sum()
    }

    pub fn moments(&self) -> MomentSummary {
        let (mut m1, mut m2) = (0.0, 0.0);
        for &(k, p) in &self.masses {
            let k = f64::from(k);
            m1 += p * k;
            m2 += p * k * k;
        }
        MomentSummary::from_raw(m1, m2)
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        let u: f64 = rng.gen();
        let idx = self.cdf.partition_point(|&c| c <= u).min(self.masses.len() - 1);
        self.masses[idx].0
    }

    fn has_both_parities(&self) -> bool {
        let mut seen = [false; 2];
        for &(k, p) in &self.masses {
            if p > 0.0 {
                seen[(k & 1) as usize] = true;
            }
        }
        seen[0] && seen[1]
    }
}
