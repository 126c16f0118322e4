//! Text formats: edge lists and degree histograms.

mod edgelist;
mod histogram;

pub use edgelist::{load_edge_list, parse_edge_list, write_mapping, EdgeList};
pub use histogram::{load_histogram, parse_histogram};

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("{path}: {source}")]
    Open {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },

    #[error("no edges")]
    NoEdges,

    #[error("read error: {0}")]
    Read(#[from] std::io::Error),

    #[error(transparent)]
    Model(#[from] seqdef_core::Error),
}

/// Strips a trailing `#` comment and surrounding whitespace.
fn content(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}
