use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use super::NetworkGraph;
use crate::degree::{DegreeKind, DegreeModel};
use crate::math::{floor, ln};
use crate::rng::{stream_rng, STREAM_EDGES, STREAM_PAIRING};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConfigModelOptions {
    /// Re-wiring passes over the conflicting stub pairs.
    pub max_sweeps: usize,
    /// Fail instead of dropping stubs that could not be placed.
    pub strict: bool,
}

impl Default for ConfigModelOptions {
    fn default() -> Self {
        Self {
            max_sweeps: 100,
            strict: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Generated {
    pub graph: NetworkGraph,
    /// Stubs left unmatched after re-wiring (always even).
    pub dropped_stubs: usize,
    pub sweeps: usize,
}

/// Random graph for `model` on `n` nodes. ER links every pair independently
/// with probability `k_hat / n`; the other kinds run the configuration
/// model on a sampled degree sequence.
pub fn generate(model: &DegreeModel, n: usize, seed: u64) -> Result<Generated> {
    if n < 2 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n as f64,
            reason: "network needs at least 2 nodes",
        });
    }
    match model.kind() {
        DegreeKind::ErdosRenyi { mean_degree } => {
            let p = (mean_degree / n as f64).min(1.0);
            Ok(Generated {
                graph: erdos_renyi_graph(n, p, seed)?,
                dropped_stubs: 0,
                sweeps: 0,
            })
        }
        _ => {
            let degrees = model.sample_degree_sequence(n, seed)?;
            configuration_model(&degrees, seed, ConfigModelOptions::default())
        }
    }
}

/// `G(n, p)` by geometric skipping over the lower-triangle pair index, so
/// the cost is proportional to the number of edges.
pub fn erdos_renyi_graph(n: usize, p: f64, seed: u64) -> Result<NetworkGraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter {
            name: "p",
            value: p,
            reason: "must lie in [0, 1]",
        });
    }
    let mut edges = Vec::new();
    if p == 1.0 {
        for v in 1..n as u32 {
            edges.extend((0..v).map(|w| (w, v)));
        }
    } else if p > 0.0 {
        let mut rng = stream_rng(seed, STREAM_EDGES);
        let log_q = ln(1.0 - p);
        let (mut v, mut w): (u64, i64) = (1, -1);
        let n = n as u64;
        while v < n {
            let r: f64 = rng.gen();
            w += 1 + floor(ln(1.0 - r) / log_q) as i64;
            while w >= v as i64 && v < n {
                w -= v as i64;
                v += 1;
            }
            if v < n {
                edges.push((w as u32, v as u32));
            }
        }
    }
    Ok(NetworkGraph::from_edges(n, edges)?.0)
}

fn canonical(a: u32, b: u32) -> (u32, u32) {
    (a.min(b), a.max(b))
}

/// Configuration model: shuffle the stubs and pair neighbours. Pairs that
/// would form a self-loop or a repeated edge are re-wired by swapping with
/// a random accepted edge, `(u, v) + (x, y) -> (u, x) + (v, y)`, which keeps
/// every degree. Whatever is still conflicting after `max_sweeps` passes is
/// dropped (or reported as an error in strict mode).
pub fn configuration_model(degrees: &[u32], seed: u64, opts: ConfigModelOptions) -> Result<Generated> {
    let total: u64 = degrees.iter().map(|&d| u64::from(d)).sum();
    if total % 2 == 1 {
        return Err(Error::InvalidParameter {
            name: "degree sum",
            value: total as f64,
            reason: "must be even",
        });
    }
    let mut stubs: Vec<u32> = Vec::with_capacity(total as usize);
    for (v, &d) in degrees.iter().enumerate() {
        stubs.extend(core::iter::repeat_n(v as u32, d as usize));
    }
    let mut rng = stream_rng(seed, STREAM_PAIRING);
    stubs.shuffle(&mut rng);

    let mut accepted: Vec<(u32, u32)> = Vec::with_capacity(stubs.len() / 2);
    let mut present: BTreeSet<(u32, u32)> = BTreeSet::new();
    let mut pending: Vec<(u32, u32)> = Vec::new();
    for pair in stubs.chunks_exact(2) {
        let (u, v) = (pair[0], pair[1]);
        if u != v && present.insert(canonical(u, v)) {
            accepted.push(canonical(u, v));
        } else {
            pending.push((u, v));
        }
    }

    const TRIES_PER_PAIR: usize = 16;
    let mut sweeps = 0;
    while !pending.is_empty() && sweeps < opts.max_sweeps {
        sweeps += 1;
        let current = core::mem::take(&mut pending);
        for (u, v) in current {
            let mut placed = false;
            for _ in 0..TRIES_PER_PAIR {
                if accepted.is_empty() {
                    break;
                }
                let i = rng.gen_range(0..accepted.len());
                let (a, b) = accepted[i];
                let (x, y) = if rng.gen::<bool>() { (a, b) } else { (b, a) };
                if u == x || v == y {
                    continue;
                }
                let (e1, e2) = (canonical(u, x), canonical(v, y));
                if e1 == e2 || present.contains(&e1) || present.contains(&e2) {
                    continue;
                }
                present.remove(&(a, b));
                accepted.swap_remove(i);
                present.insert(e1);
                present.insert(e2);
                accepted.push(e1);
                accepted.push(e2);
                placed = true;
                break;
            }
            if !placed {
                pending.push((u, v));
            }
        }
    }
    if !pending.is_empty() && opts.strict {
        return Err(Error::Unrealizable {
            attempts: sweeps,
            residual: pending.len(),
        });
    }
    let graph = NetworkGraph::from_edges(degrees.len(), accepted)?.0;
    Ok(Generated {
        graph,
        dropped_stubs: 2 * pending.len(),
        sweeps,
    })
}
