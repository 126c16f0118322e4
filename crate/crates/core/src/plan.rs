//! Attack plans: which nodes the adversary compromises, seen from the
//! fusion center as a per-report attack probability `a_i`.

use crate::math::ceil;
use crate::sprt::DetectorProfile;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AttackScheme {
    /// Uniformly random node subset.
    Random,
    /// Highest-degree nodes first.
    Intentional,
    /// Highest-betweenness nodes first.
    Betweenness,
}

impl AttackScheme {
    /// Targeted schemes compromise a fixed prefix of the report order.
    pub fn is_targeted(self) -> bool {
        !matches!(self, AttackScheme::Random)
    }

    pub fn name(self) -> &'static str {
        match self {
            AttackScheme::Random => "random",
            AttackScheme::Intentional => "degree",
            AttackScheme::Betweenness => "betweenness",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AttackPlan {
    scheme: AttackScheme,
    q: f64,
    n: u64,
}

impl AttackPlan {
    pub fn new(scheme: AttackScheme, q: f64, n: u64) -> Result<Self> {
        if !(q > 0.0 && q <= 1.0) {
            return Err(Error::InvalidParameter {
                name: "q",
                value: q,
                reason: "attacked fraction must lie in (0, 1]",
            });
        }
        if n < 1 {
            return Err(Error::InvalidParameter {
                name: "n",
                value: 0.0,
                reason: "network needs at least one node",
            });
        }
        Ok(Self { scheme, q, n })
    }

    pub fn random(q: f64, n: u64) -> Result<Self> {
        Self::new(AttackScheme::Random, q, n)
    }

    pub fn intentional(q: f64, n: u64) -> Result<Self> {
        Self::new(AttackScheme::Intentional, q, n)
    }

    pub fn betweenness(q: f64, n: u64) -> Result<Self> {
        Self::new(AttackScheme::Betweenness, q, n)
    }

    pub fn scheme(&self) -> AttackScheme {
        self.scheme
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `M = ceil(N q)`, the number of attacked nodes.
    pub fn attacked_nodes(&self) -> u64 {
        (ceil(self.n as f64 * self.q) as u64).min(self.n)
    }

    /// Probability that report `i` (1-based) comes from an attacked node.
    ///
    /// Random attack: `a_i = q`. Targeted attack with reports ordered by
    /// the attack order: `a_i = 1` for `i <= M`, and `P_F / P_D` beyond, so
    /// that the report distribution there is the same as under the null.
    pub fn attack_probability(&self, i: u64, detector: &DetectorProfile) -> f64 {
        match self.scheme {
            AttackScheme::Random => self.q,
            _ if i <= self.attacked_nodes() => 1.0,
            _ => detector.p_f() / detector.p_d(),
        }
    }
}
