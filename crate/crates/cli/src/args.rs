use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

/// Bounds and simulations for the contact process on Z^d.
#[derive(Debug, Parser)]
#[command(name = "cpbounds", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonArgs,
}

/// Flags shared by every subcommand. Each can also be set through the
/// matching `CPBOUNDS_*` environment variable; an explicit flag wins.
#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Lattice dimension.
    #[arg(long, global = true, env = "CPBOUNDS_D")]
    pub d: Option<usize>,
    /// Torus side length (even, at least 4).
    #[arg(long = "L", global = true, env = "CPBOUNDS_L")]
    pub side: Option<usize>,
    /// Infection rate per directed edge.
    #[arg(long, global = true, env = "CPBOUNDS_LAMBDA")]
    pub lambda: Option<f64>,
    /// Weight on the infecting neighbor; defaults to the optimal weight.
    #[arg(long, global = true, env = "CPBOUNDS_A")]
    pub a: Option<f64>,
    /// Weight on the infected site; defaults to the optimal weight.
    #[arg(long, global = true, env = "CPBOUNDS_B")]
    pub b: Option<f64>,
    /// Output times, comma separated.
    #[arg(long = "t", global = true, env = "CPBOUNDS_T", value_delimiter = ',')]
    pub t: Option<Vec<f64>>,
    /// Monte Carlo replicas.
    #[arg(long, global = true, env = "CPBOUNDS_REPLICAS")]
    pub replicas: Option<usize>,
    /// Displacement box radius.
    #[arg(long, global = true, env = "CPBOUNDS_RADIUS")]
    pub radius: Option<usize>,
    /// Master random seed; drawn from the clock and reported when omitted.
    #[arg(long, global = true, env = "CPBOUNDS_SEED")]
    pub seed: Option<u64>,
    /// Output file; standard output when omitted.
    #[arg(long, global = true, env = "CPBOUNDS_OUT")]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, env = "CPBOUNDS_FORMAT", value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodArg {
    Quadrature,
    Mc,
    Solver,
    All,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Probability that the simple random walk never returns to the origin.
    Gamma {
        #[arg(long, value_enum, default_value = "all")]
        method: MethodArg,
        /// Walk length for the Monte Carlo estimate.
        #[arg(long, default_value_t = 1000)]
        steps: usize,
    },
    /// Upper and lower bounds on the critical value.
    Bounds {
        /// Inclusive range of dimensions.
        #[arg(long, num_args = 2, value_names = ["MIN", "MAX"])]
        d_range: Option<Vec<usize>>,
    },
    /// Survival of the coupled contact process and linear system.
    Simulate {
        /// Write the final state of replica 0 as CSV (site, eta, xi).
        #[arg(long)]
        snapshot: Option<PathBuf>,
    },
    /// First and second moments of the linear system against the moment ODE.
    Moments {
        /// ODE time step.
        #[arg(long, default_value_t = 0.02)]
        dt: f64,
        /// Box radius used for the ODE.
        #[arg(long, default_value_t = 8)]
        ode_radius: usize,
    },
    /// Survival over a grid of infection rates.
    Scan {
        #[arg(long, default_value_t = 0.15)]
        lambda_min: f64,
        #[arg(long, default_value_t = 0.45)]
        lambda_max: f64,
        #[arg(long, default_value_t = 7)]
        lambda_steps: usize,
    },
    /// Null-vector residual and second-moment ceiling.
    Verify {
        /// ODE time step.
        #[arg(long, default_value_t = 0.02)]
        dt: f64,
    },
}
