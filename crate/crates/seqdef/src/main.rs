use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use seqdef::{CliError, Command, ExperimentConfig};

/// Sequential attack detection on complex networks.
#[derive(Debug, Parser)]
#[command(name = "seqdef", version)]
struct Cli {
    command: Command,

    /// INI file; section names are ignored.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    /// Output CSV path (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    pd: Option<f64>,
    #[arg(long)]
    pf: Option<f64>,
    #[arg(long)]
    delta: Option<f64>,
    #[arg(long)]
    theta: Option<f64>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    kmin: Option<u32>,
    #[arg(long)]
    kmax: Option<u32>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    khat: Option<f64>,
    #[arg(long)]
    q: Option<f64>,
    #[arg(long)]
    mc: Option<u64>,
    #[arg(long)]
    trials: Option<u64>,
    /// Edge list, one `u v` pair per line.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// random, degree or betweenness.
    #[arg(long)]
    scheme: Option<String>,
    /// er, powerlaw or exponential.
    #[arg(long)]
    model: Option<String>,
    /// Any config key, as KEY=VALUE. Repeatable.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
}

impl Cli {
    fn config(&self) -> Result<ExperimentConfig, CliError> {
        let mut config = ExperimentConfig::new(self.command);
        if let Some(path) = &self.config {
            config.apply_file(path)?;
        }
        let flags: [(&str, Option<String>); 18] = [
            ("seed", self.seed.map(|v| v.to_string())),
            ("out", self.out.as_ref().map(|p| p.display().to_string())),
            ("pd", self.pd.map(|v| v.to_string())),
            ("pf", self.pf.map(|v| v.to_string())),
            ("delta", self.delta.map(|v| v.to_string())),
            ("theta", self.theta.map(|v| v.to_string())),
            ("n", self.n.map(|v| v.to_string())),
            ("kmin", self.kmin.map(|v| v.to_string())),
            ("kmax", self.kmax.map(|v| v.to_string())),
            ("alpha", self.alpha.map(|v| v.to_string())),
            ("beta", self.beta.map(|v| v.to_string())),
            ("khat", self.khat.map(|v| v.to_string())),
            ("q", self.q.map(|v| v.to_string())),
            ("mc", self.mc.map(|v| v.to_string())),
            ("trials", self.trials.map(|v| v.to_string())),
            ("graph", self.graph.as_ref().map(|p| p.display().to_string())),
            ("scheme", self.scheme.clone()),
            ("model", self.model.clone()),
        ];
        for (key, value) in flags {
            if let Some(value) = value {
                config.set(key, &value).map_err(CliError::Config)?;
            }
        }
        for assignment in &self.set {
            config.apply_assignment(assignment)?;
        }
        Ok(config)
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let result = cli.config().and_then(|config| {
        log::info!("running {}", config.command.name());
        seqdef::execute(&config)
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("seqdef: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
