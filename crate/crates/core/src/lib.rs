//! Percolation thresholds, node-removal attack simulation and sequential
//! (SPRT-based) attack detection for complex networks.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and
//! the experiment drivers live in the `seqdef` companion crate.
//!
//! Module map:
//!
//! - [`degree`]: parametric and empirical degree distributions, moments,
//!   the Molloy-Reed criterion and random thinning.
//! - [`percolation`]: critical removal fractions under random and
//!   intentional attack.
//! - [`graph`]: concrete graphs, generators, components, betweenness and
//!   removal simulations.
//! - [`sprt`]: the sequential defense test, expected report counts and
//!   truncated worst-case bounds.
//! - [`design`]: detector feasibility for a given disruption budget.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
mod math;

pub mod degree;
pub mod design;
pub mod graph;
pub mod percolation;
pub mod plan;
pub mod rng;
pub mod roots;
pub mod special;
pub mod sprt;

pub use error::{Error, Result};
pub use plan::{AttackPlan, AttackScheme};
