//! Experiment configuration: built-in defaults, then an INI file, then
//! command-line overrides. Sections in the file only group keys; every key
//! lives in one flat namespace.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use ini::Ini;
use seqdef_core::degree::{DEFAULT_K_MAX, DEFAULT_K_MIN, DEFAULT_NODES};
use seqdef_core::percolation::ExponentialForm;
use seqdef_core::sprt::{Hypothesis, RiskBudget};
use seqdef_core::AttackScheme;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    /// Critical fractions against mean degree for the three model families.
    QcSweep,
    /// Expected number of reports until an attack is declared.
    M1,
    /// Normal-approximation bounds for the test truncated at `M_c`.
    WorstCase,
    /// Thresholds and report counts for the empirical parameter sets.
    Empirical,
    /// Removal curves and detection markers on an edge-list graph.
    Powergrid,
    /// Minimum detection probability against false-alarm rate.
    OperationCurves,
    /// Monte-Carlo run of the sequential test.
    Detect,
    /// Removal curves and estimated `q_c` on a generated or loaded graph.
    Attack,
    /// Analytic thresholds of one model.
    Thresholds,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::QcSweep => "qc-sweep",
            Command::M1 => "m1",
            Command::WorstCase => "worst-case",
            Command::Empirical => "empirical",
            Command::Powergrid => "powergrid",
            Command::OperationCurves => "operation-curves",
            Command::Detect => "detect",
            Command::Attack => "attack",
            Command::Thresholds => "thresholds",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelChoice {
    ErdosRenyi,
    PowerLaw,
    Exponential,
}

impl ModelChoice {
    fn name(self) -> &'static str {
        match self {
            ModelChoice::ErdosRenyi => "er",
            ModelChoice::PowerLaw => "powerlaw",
            ModelChoice::Exponential => "exponential",
        }
    }
}

impl FromStr for ModelChoice {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "er" | "erdos-renyi" | "poisson" => Ok(ModelChoice::ErdosRenyi),
            "powerlaw" | "power-law" => Ok(ModelChoice::PowerLaw),
            "exponential" | "exp" => Ok(ModelChoice::Exponential),
            _ => Err(format!("unknown model {s:?} (er, powerlaw, exponential)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum M1Kind {
    Random,
    Intentional,
    Surface,
    All,
}

impl FromStr for M1Kind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "random" => Ok(M1Kind::Random),
            "intentional" => Ok(M1Kind::Intentional),
            "surface" => Ok(M1Kind::Surface),
            "all" => Ok(M1Kind::All),
            _ => Err(format!("unknown m1 kind {s:?} (random, intentional, surface, all)")),
        }
    }
}

impl M1Kind {
    fn name(self) -> &'static str {
        match self {
            M1Kind::Random => "random",
            M1Kind::Intentional => "intentional",
            M1Kind::Surface => "surface",
            M1Kind::All => "all",
        }
    }
}

fn parse_scheme(s: &str) -> Result<AttackScheme, String> {
    match s {
        "random" => Ok(AttackScheme::Random),
        "degree" | "intentional" => Ok(AttackScheme::Intentional),
        "betweenness" => Ok(AttackScheme::Betweenness),
        _ => Err(format!("unknown scheme {s:?} (random, degree, betweenness)")),
    }
}

fn parse_truth(s: &str) -> Result<Hypothesis, String> {
    match s {
        "attack" | "h1" => Ok(Hypothesis::Attack),
        "null" | "h0" => Ok(Hypothesis::Null),
        _ => Err(format!("unknown hypothesis {s:?} (attack, null)")),
    }
}

fn truth_name(h: Hypothesis) -> &'static str {
    match h {
        Hypothesis::Attack => "attack",
        Hypothesis::Null => "null",
    }
}

fn parse_form(s: &str) -> Result<ExponentialForm, String> {
    match s {
        "simplified" => Ok(ExponentialForm::NegligibleMinDegree),
        "exact" => Ok(ExponentialForm::Exact),
        _ => Err(format!("unknown exponential form {s:?} (simplified, exact)")),
    }
}

fn form_name(f: ExponentialForm) -> &'static str {
    match f {
        ExponentialForm::NegligibleMinDegree => "simplified",
        ExponentialForm::Exact => "exact",
    }
}

/// Every parameter a command may read.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub command: Command,
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub model: ModelChoice,
    pub graph: Option<PathBuf>,
    pub histogram: Option<PathBuf>,
    pub scheme: AttackScheme,
    pub truth: Hypothesis,
    pub kind: M1Kind,
    pub pd: f64,
    pub pf: f64,
    pub delta: f64,
    pub theta: f64,
    pub n: u64,
    pub kmin: u32,
    pub kmax: u32,
    pub alpha: f64,
    pub beta: f64,
    pub khat: f64,
    pub q: f64,
    pub mc: Option<u64>,
    pub trials: u64,
    pub steps: usize,
    pub q_max: f64,
    pub exponential_form: ExponentialForm,
    pub pd_grid: Vec<f64>,
    pub pf_grid: Vec<f64>,
    pub q_grid: Vec<f64>,
    pub mean_grid: Vec<f64>,
    pub qc_grid: Vec<f64>,
    pub mc_grid: Vec<u64>,
    pub alpha_grid: Vec<f64>,
    pub beta_grid: Vec<f64>,
    pub khat_grid: Vec<f64>,
}

fn steps(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let count = ((hi - lo) / step).round() as usize;
    // rounded to 10 decimals so the echoed grid reads cleanly
    (0..=count).map(|i| ((lo + i as f64 * step) * 1e10).round() / 1e10).collect()
}

impl ExperimentConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            seed: 1,
            out: None,
            model: ModelChoice::PowerLaw,
            graph: None,
            histogram: None,
            scheme: AttackScheme::Random,
            truth: Hypothesis::Attack,
            kind: M1Kind::All,
            pd: 0.9,
            pf: 0.001,
            delta: RiskBudget::DEFAULT_DELTA,
            theta: RiskBudget::DEFAULT_THETA,
            n: DEFAULT_NODES,
            kmin: DEFAULT_K_MIN,
            kmax: DEFAULT_K_MAX,
            alpha: 2.5,
            beta: 1.63,
            khat: 4.0,
            q: 0.3,
            mc: None,
            trials: 100,
            steps: 51,
            q_max: 0.5,
            exponential_form: ExponentialForm::NegligibleMinDegree,
            pd_grid: steps(0.1, 0.9, 0.1),
            pf_grid: vec![0.0001, 0.0005, 0.001, 0.005, 0.01, 0.05],
            q_grid: steps(0.1, 1.0, 0.1),
            mean_grid: vec![1.05, 1.25, 1.5, 1.75, 2.0, 2.5, 3.0, 3.5, 4.0, 5.0, 6.0],
            qc_grid: vec![0.0005, 0.001, 0.002, 0.005, 0.01, 0.02, 0.05, 0.1, 0.2, 0.5],
            mc_grid: vec![10, 20, 50, 100, 200, 500, 1000],
            alpha_grid: steps(2.0, 3.0, 0.1),
            beta_grid: steps(1.0, 4.0, 0.25),
            khat_grid: steps(1.5, 8.0, 0.5),
        }
    }

    /// Applies every key of an INI file.
    pub fn apply_file(&mut self, path: &Path) -> Result<(), CliError> {
        let ini = Ini::load_from_file(path).map_err(|e| CliError::config(format!("{}: {e}", path.display())))?;
        for (_, props) in ini.iter() {
            for (key, value) in props.iter() {
                self.set(key, value)
                    .map_err(|e| CliError::config(format!("{}: {e}", path.display())))?;
            }
        }
        Ok(())
    }

    /// Applies a `KEY=VALUE` override.
    pub fn apply_assignment(&mut self, assignment: &str) -> Result<(), CliError> {
        let (key, value) = assignment
            .split_once('=')
            .ok_or_else(|| CliError::config(format!("expected KEY=VALUE, got {assignment:?}")))?;
        self.set(key.trim(), value.trim()).map_err(CliError::Config)
    }

    /// Sets one key. Keys are case-insensitive and `-` equals `_`.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        let key = key.trim().to_ascii_lowercase().replace('-', "_");
        let value = value.trim();
        let bad = |e: String| format!("{key}: {e}");
        match key.as_str() {
            "seed" => self.seed = num(value).map_err(bad)?,
            "out" => self.out = optional_path(value),
            "model" => self.model = value.parse().map_err(bad)?,
            "graph" => self.graph = optional_path(value),
            "histogram" => self.histogram = optional_path(value),
            "scheme" => self.scheme = parse_scheme(value).map_err(bad)?,
            "truth" => self.truth = parse_truth(value).map_err(bad)?,
            "kind" => self.kind = value.parse().map_err(bad)?,
            "pd" => self.pd = num(value).map_err(bad)?,
            "pf" => self.pf = num(value).map_err(bad)?,
            "delta" => self.delta = num(value).map_err(bad)?,
            "theta" => self.theta = num(value).map_err(bad)?,
            "n" => self.n = num(value).map_err(bad)?,
            "kmin" => self.kmin = num(value).map_err(bad)?,
            "kmax" => self.kmax = num(value).map_err(bad)?,
            "alpha" => self.alpha = num(value).map_err(bad)?,
            "beta" => self.beta = num(value).map_err(bad)?,
            "khat" => self.khat = num(value).map_err(bad)?,
            "q" => self.q = num(value).map_err(bad)?,
            "mc" => {
                self.mc = if value.is_empty() || value == "none" {
                    None
                } else {
                    Some(num(value).map_err(bad)?)
                }
            }
            "trials" => self.trials = num(value).map_err(bad)?,
            "steps" => self.steps = num(value).map_err(bad)?,
            "q_max" => self.q_max = num(value).map_err(bad)?,
            "exponential_form" => self.exponential_form = parse_form(value).map_err(bad)?,
            "pd_grid" => self.pd_grid = list(value).map_err(bad)?,
            "pf_grid" => self.pf_grid = list(value).map_err(bad)?,
            "q_grid" => self.q_grid = list(value).map_err(bad)?,
            "mean_grid" => self.mean_grid = list(value).map_err(bad)?,
            "qc_grid" => self.qc_grid = list(value).map_err(bad)?,
            "mc_grid" => self.mc_grid = list(value).map_err(bad)?,
            "alpha_grid" => self.alpha_grid = list(value).map_err(bad)?,
            "beta_grid" => self.beta_grid = list(value).map_err(bad)?,
            "khat_grid" => self.khat_grid = list(value).map_err(bad)?,
            _ => return Err(format!("unknown key {key:?}")),
        }
        Ok(())
    }

    pub fn risk(&self) -> Result<RiskBudget, CliError> {
        Ok(RiskBudget::new(self.delta, self.theta)?)
    }

    /// `key = value` pairs in a fixed order, for the output header.
    pub fn echo(&self) -> Vec<(&'static str, String)> {
        let path = |p: &Option<PathBuf>| p.as_ref().map_or_else(|| "none".to_string(), |p| p.display().to_string());
        vec![
            ("command", self.command.name().to_string()),
            ("seed", self.seed.to_string()),
            ("model", self.model.name().to_string()),
            ("graph", path(&self.graph)),
            ("histogram", path(&self.histogram)),
            ("scheme", self.scheme.name().to_string()),
            ("truth", truth_name(self.truth).to_string()),
            ("kind", self.kind.name().to_string()),
            ("pd", self.pd.to_string()),
            ("pf", self.pf.to_string()),
            ("delta", self.delta.to_string()),
            ("theta", self.theta.to_string()),
            ("n", self.n.to_string()),
            ("kmin", self.kmin.to_string()),
            ("kmax", self.kmax.to_string()),
            ("alpha", self.alpha.to_string()),
            ("beta", self.beta.to_string()),
            ("khat", self.khat.to_string()),
            ("q", self.q.to_string()),
            ("mc", self.mc.map_or_else(|| "none".to_string(), |m| m.to_string())),
            ("trials", self.trials.to_string()),
            ("steps", self.steps.to_string()),
            ("q_max", self.q_max.to_string()),
            ("exponential_form", form_name(self.exponential_form).to_string()),
            ("pd_grid", join(&self.pd_grid)),
            ("pf_grid", join(&self.pf_grid)),
            ("q_grid", join(&self.q_grid)),
            ("mean_grid", join(&self.mean_grid)),
            ("qc_grid", join(&self.qc_grid)),
            ("mc_grid", join(&self.mc_grid)),
            ("alpha_grid", join(&self.alpha_grid)),
            ("beta_grid", join(&self.beta_grid)),
            ("khat_grid", join(&self.khat_grid)),
        ]
    }
}

fn optional_path(value: &str) -> Option<PathBuf> {
    (!value.is_empty() && value != "none").then(|| PathBuf::from(value))
}

fn num<T: FromStr>(value: &str) -> Result<T, String>
where
    T::Err: fmt::Display,
{
    value.parse().map_err(|e| format!("{value:?}: {e}"))
}

fn list<T: FromStr>(value: &str) -> Result<Vec<T>, String>
where
    T::Err: fmt::Display,
{
    let items: Vec<T> = value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(num)
        .collect::<Result<_, _>>()?;
    if items.is_empty() {
        return Err("empty grid".into());
    }
    Ok(items)
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}
