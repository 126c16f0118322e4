use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use seqdef_core::degree::DegreeHistogram;

use super::{content, LoadError};

/// Two columns per line, `degree probability`; `#` comments.
pub fn parse_histogram<R: BufRead>(reader: R) -> Result<DegreeHistogram, LoadError> {
    let mut entries = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let tokens: Vec<&str> = content(&line).split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [k, p] => {
                let k: u32 = k.parse().map_err(|_| LoadError::Malformed {
                    line: lineno,
                    msg: format!("bad degree {k:?}"),
                })?;
                let p: f64 = p.parse().map_err(|_| LoadError::Malformed {
                    line: lineno,
                    msg: format!("bad probability {p:?}"),
                })?;
                entries.push((k, p));
            }
            _ => {
                return Err(LoadError::Malformed {
                    line: lineno,
                    msg: "expected \"degree probability\"".into(),
                })
            }
        }
    }
    Ok(DegreeHistogram::new(entries)?)
}

pub fn load_histogram(path: &Path) -> Result<DegreeHistogram, LoadError> {
    let file = File::open(path).map_err(|source| LoadError::Open {
        path: path.to_path_buf(),
        source,
    })?;
    parse_histogram(BufReader::new(file))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_two_columns() {
        let h = parse_histogram("# k p\n1 0.5\n2 0.25 # c\n4 0.25\n".as_bytes()).unwrap();
        assert_eq!(h.entries(), &[(1, 0.5), (2, 0.25), (4, 0.25)]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_histogram("1 0.5\n".as_bytes()).is_err());
        assert!(matches!(parse_histogram("1 0.5 3\n".as_bytes()), Err(LoadError::Malformed { line: 1, .. })));
        assert!(parse_histogram("".as_bytes()).is_err());
    }
}
