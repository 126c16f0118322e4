//! Bracketed bisection, optionally growing the upper end of the bracket
//! until the sign changes. Every target function in the crate is monotone
//! on its bracket, so bisection always converges.

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bisection {
    /// Stop once `|f(x)| <= tol`.
    pub tol: f64,
    pub max_iter: usize,
    /// How many times the upper bound may be doubled (relative to `lo`)
    /// when the initial bracket has no sign change. Zero disables growth.
    pub max_expansions: usize,
}

impl Default for Bisection {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iter: 200,
            max_expansions: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub x: f64,
    pub residual: f64,
    pub iterations: usize,
}

impl Bisection {
    pub fn expanding(max_expansions: usize) -> Self {
        Self {
            max_expansions,
            ..Self::default()
        }
    }

    pub fn solve<F: FnMut(f64) -> f64>(&self, mut f: F, lo: f64, hi: f64) -> Result<Root> {
        let mut lo = lo;
        let mut hi = hi;
        let mut f_lo = f(lo);
        let mut f_hi = f(hi);
        if f_lo == 0.0 {
            return Ok(Root { x: lo, residual: 0.0, iterations: 0 });
        }
        if f_hi == 0.0 {
            return Ok(Root { x: hi, residual: 0.0, iterations: 0 });
        }
        let mut expansions = 0;
        while f_lo.signum() == f_hi.signum() {
            if expansions == self.max_expansions || !f_hi.is_finite() {
                return Err(Error::NoRoot { lo, hi, f_lo, f_hi });
            }
            let width = hi - lo;
            lo = hi;
            f_lo = f_hi;
            hi = lo + 2.0 * width;
            f_hi = f(hi);
            expansions += 1;
        }

        let mut best = if f_lo.abs() < f_hi.abs() { (lo, f_lo) } else { (hi, f_hi) };
        for iter in 1..=self.max_iter {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let f_mid = f(mid);
            if f_mid.abs() < best.1.abs() {
                best = (mid, f_mid);
            }
            if f_mid.abs() <= self.tol {
                return Ok(Root { x: mid, residual: f_mid, iterations: iter });
            }
            if f_mid.signum() == f_lo.signum() {
                lo = mid;
                f_lo = f_mid;
            } else {
                hi = mid;
            }
        }
        if best.1.abs() <= self.tol {
            Ok(Root { x: best.0, residual: best.1, iterations: self.max_iter })
        } else {
            Err(Error::NotConverged {
                x: best.0,
                residual: best.1,
                iterations: self.max_iter,
            })
        }
    }
}
