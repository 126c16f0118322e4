//! Special functions used by the analytic formulas.

use crate::math::{exp, lgamma, ln};

const FRAC_1_SQRT_2: f64 = core::f64::consts::FRAC_1_SQRT_2;

/// Standard normal CDF, `0.5 * erfc(-x / sqrt(2))`.
///
/// `libm::erfc` is the fdlibm rational approximation (sub-ulp in the
/// body, relative accuracy maintained deep into the tails), which keeps
/// the worst-case bounds meaningful when `y` is several sigmas out.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x * FRAC_1_SQRT_2)
}

/// Poisson probability mass `e^-mean mean^k / k!`, evaluated in log space.
pub fn poisson_pmf(k: u32, mean: f64) -> f64 {
    if mean == 0.0 {
        return if k == 0 { 1.0 } else { 0.0 };
    }
    let k = f64::from(k);
    exp(k * ln(mean) - mean - lgamma(k + 1.0))
}

/// `x ln(x / y)` with the `0 ln 0 = 0` convention.
fn xlogy_ratio(x: f64, y: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * ln(x / y)
    }
}

/// Binary Kullback-Leibler divergence `D(B(p) || B(q))` in nats.
pub fn binary_kl(p: f64, q: f64) -> f64 {
    xlogy_ratio(p, q) + xlogy_ratio(1.0 - p, 1.0 - q)
}
