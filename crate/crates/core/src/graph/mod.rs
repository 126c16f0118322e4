//! Undirected simple graphs and the attack simulations run on them.

mod attack;
mod betweenness;
mod components;
mod generate;

use alloc::vec;
use alloc::vec::Vec;

pub use attack::{
    curve_from_order, estimate_qc, estimate_qc_exhaustive, mean_curve, removal_order, removal_profile, simulate_attack,
    QcEstimate, RemovalCurve, RemovalPoint, RemovalProfile, EXHAUSTIVE_LIMIT,
};
pub use betweenness::{betweenness, betweenness_raw};
pub use components::{largest_component, Component, UnionFind};
pub use generate::{configuration_model, erdos_renyi_graph, generate, ConfigModelOptions, Generated};

use crate::degree::{DegreeHistogram, MomentSummary};
use crate::{Error, Result};

/// Simple undirected graph on nodes `0..n`.
///
/// The edge list is kept canonical (`u < v`, sorted) and every adjacency
/// list is sorted, so two graphs with the same edge set compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NetworkGraph {
    adjacency: Vec<Vec<u32>>,
    edges: Vec<(u32, u32)>,
}

/// What [`NetworkGraph::from_edges`] discarded to keep the graph simple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BuildReport {
    pub self_loops: usize,
    pub duplicates: usize,
}

impl NetworkGraph {
    pub fn from_edges<I>(nodes: usize, edges: I) -> Result<(Self, BuildReport)>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut report = BuildReport::default();
        let mut list = Vec::new();
        for (u, v) in edges {
            for node in [u, v] {
                if node as usize >= nodes {
                    return Err(Error::NodeOutOfRange { node, nodes });
                }
            }
            if u == v {
                report.self_loops += 1;
            } else {
                list.push((u.min(v), u.max(v)));
            }
        }
        list.sort_unstable();
        let before = list.len();
        list.dedup();
        report.duplicates = before - list.len();

        let mut adjacency = vec![Vec::new(); nodes];
        for &(u, v) in &list {
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        Ok((Self { adjacency, edges: list }, report))
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adjacency[v as usize]
    }

    pub fn degree(&self, v: u32) -> u32 {
        self.adjacency[v as usize].len() as u32
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.adjacency.iter().map(|a| a.len() as u32).collect()
    }

    pub fn mean_degree(&self) -> f64 {
        if self.adjacency.is_empty() {
            0.0
        } else {
            2.0 * self.edges.len() as f64 / self.adjacency.len() as f64
        }
    }

    /// Moments of the degree sequence, isolated nodes included.
    pub fn moment_summary(&self) -> MomentSummary {
        let n = self.adjacency.len() as f64;
        if n == 0.0 {
            return MomentSummary::from_raw(0.0, 0.0);
        }
        let (mut s1, mut s2) = (0.0, 0.0);
        for a in &self.adjacency {
            let k = a.len() as f64;
            s1 += k;
            s2 += k * k;
        }
        MomentSummary::from_raw(s1 / n, s2 / n)
    }

    pub fn degree_histogram(&self) -> Result<DegreeHistogram> {
        DegreeHistogram::from_degree_sequence(&self.degrees())
    }
}
