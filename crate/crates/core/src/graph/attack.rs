use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;

use super::betweenness::betweenness;
use super::components::UnionFind;
use super::NetworkGraph;
use crate::math::floor;
use crate::plan::{AttackPlan, AttackScheme};
use crate::rng::stream_rng;
use crate::{Error, Result};

/// Largest graph accepted by [`estimate_qc_exhaustive`].
pub const EXHAUSTIVE_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RemovalPoint {
    pub removed_fraction: f64,
    pub removed_nodes: usize,
    pub largest_component_fraction: f64,
    /// `tau` of the surviving degree sequence (0 once nothing is left).
    pub remaining_tau: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct RemovalCurve {
    pub points: Vec<RemovalPoint>,
}

/// Largest component size and degree sums after removing the first `r`
/// nodes of an order, for every `r = 0..=n`.
#[derive(Debug, Clone, PartialEq)]
pub struct RemovalProfile {
    pub largest: Vec<u32>,
    degree_sum: Vec<u64>,
    degree_sq_sum: Vec<u64>,
}

impl RemovalProfile {
    /// `tau` of the survivors after `r` removals.
    pub fn tau(&self, r: usize) -> f64 {
        if self.degree_sum[r] == 0 {
            0.0
        } else {
            self.degree_sq_sum[r] as f64 / self.degree_sum[r] as f64
        }
    }

    pub fn len(&self) -> usize {
        self.largest.len()
    }

    pub fn is_empty(&self) -> bool {
        self.largest.is_empty()
    }
}

/// Node removal order for `scheme`. Random orders use stream `trial` of
/// `seed`; degree and betweenness orders are computed once on the intact
/// graph (descending score, lowest id first on ties).
pub fn removal_order(graph: &NetworkGraph, scheme: AttackScheme, seed: u64, trial: u64) -> Vec<u32> {
    let mut order: Vec<u32> = (0..graph.node_count() as u32).collect();
    match scheme {
        AttackScheme::Random => {
            let mut rng = stream_rng(seed, trial);
            order.shuffle(&mut rng);
        }
        AttackScheme::Intentional => {
            order.sort_by_key(|&v| (core::cmp::Reverse(graph.degree(v)), v));
        }
        AttackScheme::Betweenness => {
            let score = betweenness(graph);
            order.sort_by(|&a, &b| score[b as usize].total_cmp(&score[a as usize]).then(a.cmp(&b)));
        }
    }
    order
}

/// Replays the removal backwards, adding nodes in reverse order to a
/// union-find, which yields the whole profile in near-linear time.
pub fn removal_profile(graph: &NetworkGraph, order: &[u32]) -> RemovalProfile {
    let n = graph.node_count();
    debug_assert_eq!(order.len(), n);
    let mut largest = vec![0u32; n + 1];
    let mut degree_sum = vec![0u64; n + 1];
    let mut degree_sq_sum = vec![0u64; n + 1];
    let mut present = vec![false; n];
    let mut degree = vec![0u64; n];
    let mut uf = UnionFind::new(n);
    let (mut s1, mut s2, mut best) = (0u64, 0u64, 0u32);
    for r in (0..n).rev() {
        let v = order[r];
        present[v as usize] = true;
        let mut d = 0u64;
        for &u in graph.neighbors(v) {
            if present[u as usize] {
                let du = &mut degree[u as usize];
                s2 += 2 * *du + 1;
                *du += 1;
                d += 1;
                uf.union(u, v);
            }
        }
        degree[v as usize] = d;
        s1 += 2 * d;
        s2 += d * d;
        best = best.max(uf.set_size(v));
        largest[r] = best;
        degree_sum[r] = s1;
        degree_sq_sum[r] = s2;
    }
    RemovalProfile {
        largest,
        degree_sum,
        degree_sq_sum,
    }
}

/// Samples a removal profile at `step_count` evenly spaced fractions of
/// `[0, q]`; the node count at fraction `f` is `round(f n)`.
pub fn curve_from_order(graph: &NetworkGraph, order: &[u32], q: f64, step_count: usize) -> Result<RemovalCurve> {
    if step_count < 2 {
        return Err(Error::InvalidParameter {
            name: "step_count",
            value: step_count as f64,
            reason: "need at least 2 samples",
        });
    }
    let n = graph.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let profile = removal_profile(graph, order);
    let points = (0..step_count)
        .map(|j| {
            let f = q * j as f64 / (step_count - 1) as f64;
            let r = (floor(f * n as f64 + 0.5) as usize).min(n);
            RemovalPoint {
                removed_fraction: f,
                removed_nodes: r,
                largest_component_fraction: f64::from(profile.largest[r]) / n as f64,
                remaining_tau: profile.tau(r),
            }
        })
        .collect();
    Ok(RemovalCurve { points })
}

/// Removal curve of `plan` on `graph` from 0 up to the plan's fraction.
pub fn simulate_attack(graph: &NetworkGraph, plan: &AttackPlan, step_count: usize, seed: u64) -> Result<RemovalCurve> {
    let order = removal_order(graph, plan.scheme(), seed, 0);
    curve_from_order(graph, &order, plan.q(), step_count)
}

/// Pointwise mean of curves sampled on the same grid.
pub fn mean_curve(curves: &[RemovalCurve]) -> RemovalCurve {
    let Some(first) = curves.first() else {
        return RemovalCurve::default();
    };
    let k = curves.len() as f64;
    let points = first
        .points
        .iter()
        .enumerate()
        .map(|(j, p)| {
            let (mut lcc, mut tau) = (0.0, 0.0);
            for c in curves {
                lcc += c.points[j].largest_component_fraction;
                tau += c.points[j].remaining_tau;
            }
            RemovalPoint {
                largest_component_fraction: lcc / k,
                remaining_tau: tau / k,
                ..*p
            }
        })
        .collect();
    RemovalCurve { points }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QcEstimate {
    pub qc: f64,
    pub per_trial: Vec<f64>,
    /// The intact graph already has `tau <= 2`; `qc` is then 0.
    pub initially_subcritical: bool,
}

fn crossing(profile: &RemovalProfile, n: usize) -> f64 {
    (0..=n).find(|&r| profile.tau(r) <= 2.0).unwrap_or(n) as f64 / n as f64
}

/// Smallest removed fraction at which the survivors' `tau` drops to 2 or
/// below, checked after every single removal. Random attack averages over
/// `trials` independent orders; the targeted orders are deterministic and
/// run once.
pub fn estimate_qc(graph: &NetworkGraph, scheme: AttackScheme, trials: usize, seed: u64) -> Result<QcEstimate> {
    if trials < 1 {
        return Err(Error::InvalidParameter {
            name: "trials",
            value: 0.0,
            reason: "need at least one trial",
        });
    }
    let n = graph.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if graph.moment_summary().tau <= 2.0 {
        return Ok(QcEstimate {
            qc: 0.0,
            per_trial: vec![0.0],
            initially_subcritical: true,
        });
    }
    let runs = if scheme.is_targeted() { 1 } else { trials };
    let per_trial: Vec<f64> = (0..runs as u64)
        .map(|t| crossing(&removal_profile(graph, &removal_order(graph, scheme, seed, t)), n))
        .collect();
    Ok(QcEstimate {
        qc: per_trial.iter().sum::<f64>() / per_trial.len() as f64,
        per_trial,
        initially_subcritical: false,
    })
}

/// Exhaustive variant for small graphs: the smallest fraction `r / n` such
/// that some set of `r` removed nodes leaves survivors with `tau <= 2`,
/// i.e. the threshold of the most damaging attack.
pub fn estimate_qc_exhaustive(graph: &NetworkGraph) -> Result<QcEstimate> {
    let n = graph.node_count();
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::TooLarge {
            nodes: n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let full: u32 = (1u32 << n) - 1;
    let tau_without = |removed: u32| {
        let (mut s1, mut s2) = (0u64, 0u64);
        for v in 0..n as u32 {
            if removed & (1 << v) != 0 {
                continue;
            }
            let d = graph.neighbors(v).iter().filter(|&&u| removed & (1 << u) == 0).count() as u64;
            s1 += d;
            s2 += d * d;
        }
        if s1 == 0 {
            0.0
        } else {
            s2 as f64 / s1 as f64
        }
    };
    let initially_subcritical = tau_without(0) <= 2.0;
    let best = (0..=full)
        .filter(|&mask| tau_without(mask) <= 2.0)
        .map(|mask| mask.count_ones())
        .min()
        .unwrap_or(n as u32);
    let qc = f64::from(best) / n as f64;
    Ok(QcEstimate {
        qc,
        per_trial: vec![qc],
        initially_subcritical,
    })
}
