use crate::math::ln;
use crate::{Error, Result};

/// Per-node detection (`P_D`) and false-alarm (`P_F`) probabilities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetectorProfile {
    p_d: f64,
    p_f: f64,
}

fn open_unit(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must lie in (0, 1)",
        })
    }
}

impl DetectorProfile {
    pub fn new(p_d: f64, p_f: f64) -> Result<Self> {
        open_unit("p_d", p_d)?;
        open_unit("p_f", p_f)?;
        if p_d < p_f {
            return Err(Error::InvalidParameter {
                name: "p_d",
                value: p_d,
                reason: "detection probability below false-alarm probability",
            });
        }
        Ok(Self { p_d, p_f })
    }

    pub fn p_d(&self) -> f64 {
        self.p_d
    }

    pub fn p_f(&self) -> f64 {
        self.p_f
    }
}

/// System-level false-alarm (`delta`) and miss (`theta`) targets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiskBudget {
    delta: f64,
    theta: f64,
}

impl RiskBudget {
    pub const DEFAULT_DELTA: f64 = 0.01;
    pub const DEFAULT_THETA: f64 = 0.001;

    pub fn new(delta: f64, theta: f64) -> Result<Self> {
        open_unit("delta", delta)?;
        open_unit("theta", theta)?;
        if delta + theta >= 1.0 {
            return Err(Error::InvalidParameter {
                name: "delta",
                value: delta,
                reason: "delta + theta must be < 1",
            });
        }
        Ok(Self { delta, theta })
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// `ln A = ln((1 - theta) / delta)`, positive.
    pub fn log_a(&self) -> f64 {
        ln((1.0 - self.theta) / self.delta)
    }

    /// `ln B = ln(theta / (1 - delta))`, negative.
    pub fn log_b(&self) -> f64 {
        ln(self.theta / (1.0 - self.delta))
    }

    /// `theta ln B + (1 - theta) ln A`, the numerator of Wald's expected
    /// sample size under `H1`.
    pub fn wald_numerator(&self) -> f64 {
        self.theta * self.log_b() + (1.0 - self.theta) * self.log_a()
    }

    pub fn swapped(&self) -> Self {
        Self {
            delta: self.theta,
            theta: self.delta,
        }
    }
}

impl Default for RiskBudget {
    fn default() -> Self {
        Self {
            delta: Self::DEFAULT_DELTA,
            theta: Self::DEFAULT_THETA,
        }
    }
}
