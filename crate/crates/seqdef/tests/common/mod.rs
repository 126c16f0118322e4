#![allow(dead_code)]

use seqdef::{Command, ExperimentConfig, Table};

pub fn config(command: Command, assignments: &[&str]) -> ExperimentConfig {
    let mut c = ExperimentConfig::new(command);
    for a in assignments {
        c.apply_assignment(a).unwrap();
    }
    c
}

pub fn run(command: Command, assignments: &[&str]) -> Table {
    seqdef::experiments::run(&config(command, assignments)).unwrap()
}

pub fn col<'a>(t: &'a Table, row: &'a [String], name: &str) -> &'a str {
    &row[t.column(name).unwrap_or_else(|| panic!("no column {name}"))]
}

pub fn num(t: &Table, row: &[String], name: &str) -> f64 {
    col(t, row, name).parse().unwrap()
}

/// Non-comment lines of a CSV file.
pub fn body(text: &str) -> Vec<String> {
    text.lines().filter(|l| !l.starts_with('#')).map(str::to_owned).collect()
}
