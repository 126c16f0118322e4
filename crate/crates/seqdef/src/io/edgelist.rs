use std::collections::BTreeSet;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use seqdef_core::graph::{BuildReport, NetworkGraph};

use super::{content, LoadError};

/// A graph read from an edge list, with the original node ids.
#[derive(Debug, Clone)]
pub struct EdgeList {
    pub graph: NetworkGraph,
    pub report: BuildReport,
    /// `labels[i]` is the id that node `i` had in the file. Ids are
    /// assigned in ascending order of the original ids.
    pub labels: Vec<u64>,
}

fn parse_id(token: &str, line: usize) -> Result<u64, LoadError> {
    token.parse().map_err(|_| LoadError::Malformed {
        line,
        msg: format!("expected a non-negative integer node id, got {token:?}"),
    })
}

/// Reads `u v` lines. A line holding a single id, or `node <id>`, declares
/// an isolated node. `#` starts a comment.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<EdgeList, LoadError> {
    let mut ids = BTreeSet::new();
    let mut raw = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let tokens: Vec<&str> = content(&line).split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            ["node", id] | [id] => {
                ids.insert(parse_id(id, lineno)?);
            }
            [u, v] => {
                let (u, v) = (parse_id(u, lineno)?, parse_id(v, lineno)?);
                ids.insert(u);
                ids.insert(v);
                raw.push((u, v));
            }
            _ => {
                return Err(LoadError::Malformed {
                    line: lineno,
                    msg: format!("expected \"u v\", got {} fields", tokens.len()),
                })
            }
        }
    }
    if raw.is_empty() {
        return Err(LoadError::NoEdges);
    }
    let labels: Vec<u64> = ids.into_iter().collect();
    if labels.len() > u32::MAX as usize {
        return Err(LoadError::Malformed {
            line: 0,
            msg: "more than 2^32 nodes".into(),
        });
    }
    let index = |id: u64| labels.binary_search(&id).expect("id collected above") as u32;
    let edges = raw.into_iter().map(|(u, v)| (index(u), index(v)));
    let (graph, report) = NetworkGraph::from_edges(labels.len(), edges)?;
    Ok(EdgeList { graph, report, labels })
}

pub fn load_edge_list(path: &Path) -> Result<EdgeList, LoadError> {
    let file = File::open(path).map_err(|source| LoadError::Open {
        path: path.to_path_buf(),
        source,
    })?;
    let list = parse_edge_list(BufReader::new(file))?;
    if list.report.self_loops > 0 || list.report.duplicates > 0 {
        log::warn!(
            "{}: dropped {} self-loops and {} duplicate edges",
            path.display(),
            list.report.self_loops,
            list.report.duplicates
        );
    }
    Ok(list)
}

/// Writes `index original_id` lines.
pub fn write_mapping<W: Write>(mut out: W, labels: &[u64]) -> std::io::Result<()> {
    writeln!(out, "# index original_id")?;
    for (i, id) in labels.iter().enumerate() {
        writeln!(out, "{i} {id}")?;
    }
    Ok(())
}
