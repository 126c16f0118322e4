use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("degenerate degree support: k_min = {k_min}, k_max = {k_max}")]
    DegenerateSupport { k_min: u32, k_max: u32 },

    #[error("invalid degree histogram: {0}")]
    InvalidHistogram(String),

    #[error("network already disconnected in percolation sense (tau = {tau})")]
    AlreadyDisconnected { tau: f64 },

    #[error("no root in [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    NoRoot { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("root finder stopped after {iterations} iterations at x = {x} (residual {residual})")]
    NotConverged {
        x: f64,
        residual: f64,
        iterations: usize,
    },

    #[error("unsupported: {0}")]
    Unsupported(&'static str),

    #[error("degree sequence unrealizable after {attempts} re-wiring sweeps ({residual} conflicting pairs left)")]
    Unrealizable { attempts: usize, residual: usize },

    #[error("cannot make the degree sum even: every degree in the support has the same parity")]
    ParityUnfixable,

    #[error("attack and null hypotheses coincide (attacked report probability equals P_F = {p_f})")]
    IdenticalHypotheses { p_f: f64 },

    #[error("sequential test already decided at report {stop_index}")]
    AlreadyDecided { stop_index: usize },

    #[error("truncation at M_c = {mc} requested but the trace holds {reports} reports")]
    TruncationMismatch { mc: usize, reports: usize },

    #[error("infeasible at this M_c = {mc}: even P_D = 1 gives {best_lhs} < {rhs}")]
    Infeasible { mc: f64, best_lhs: f64, rhs: f64 },

    #[error("graph too large for exhaustive search: {nodes} nodes (limit {limit})")]
    TooLarge { nodes: usize, limit: usize },

    #[error("graph has no nodes")]
    EmptyGraph,

    #[error("edge endpoint {node} outside [0, {nodes})")]
    NodeOutOfRange { node: u32, nodes: usize },
}
