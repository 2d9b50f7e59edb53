//! Command-line front end: resolves flags into a [`RunConfig`], runs one
//! subcommand and renders its [`Report`] as JSON or CSV.

mod args;
pub mod commands;
pub mod report;

use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;

pub use args::{Cli, Command, CommonArgs, Format, MethodArg};
pub use commands::BoxError;
pub use report::{Check, Report, RunConfig, Tabular};

use commands::resolve_weights;

/// Rendered output of one run.
#[derive(Debug, Clone)]
pub struct Rendered {
    pub text: String,
    pub passed: bool,
}

fn clock_seed() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_nanos() as u64)
        .unwrap_or(0)
}

/// Expands every default for the chosen subcommand.
pub fn resolve(cli: &Cli) -> Result<RunConfig, BoxError> {
    let c = &cli.common;
    let format = c.format.unwrap_or(Format::Json);
    let d = c.d.unwrap_or(3);
    let mut cfg = RunConfig::new("", d, format);
    cfg.out = c.out.as_ref().map(|p| p.display().to_string());
    let seed = || c.seed.unwrap_or_else(clock_seed);
    match &cli.command {
        Command::Gamma { method, steps } => {
            cfg.command = "gamma".into();
            cfg.method = Some(*method);
            if matches!(method, MethodArg::Mc | MethodArg::All) {
                cfg.steps = Some(*steps);
                cfg.replicas = Some(c.replicas.unwrap_or(100_000));
                cfg.seed = Some(seed());
            }
            if matches!(method, MethodArg::Solver | MethodArg::All) {
                cfg.radius = Some(c.radius.unwrap_or(16));
            }
        }
        Command::Bounds { d_range } => {
            cfg.command = "bounds".into();
            if let Some(r) = d_range {
                cfg.d = r[0];
                cfg.d_max = Some(r[1]);
            }
            cfg.a = c.a;
            cfg.b = c.b;
        }
        Command::Simulate { snapshot } => {
            cfg.command = "simulate".into();
            cfg.side = Some(c.side.unwrap_or(16));
            cfg.lambda = Some(c.lambda.unwrap_or(0.36));
            cfg.times = Some(c.t.clone().unwrap_or_else(|| vec![1.0]));
            cfg.replicas = Some(c.replicas.unwrap_or(1000));
            cfg.seed = Some(seed());
            cfg.snapshot = snapshot.as_ref().map(|p| p.display().to_string());
        }
        Command::Moments { dt, ode_radius } => {
            cfg.command = "moments".into();
            cfg.side = Some(c.side.unwrap_or(12));
            cfg.lambda = Some(c.lambda.unwrap_or(0.36));
            cfg.times = Some(c.t.clone().unwrap_or_else(|| vec![0.5, 1.0, 2.0]));
            cfg.replicas = Some(c.replicas.unwrap_or(1000));
            cfg.radius = Some(c.radius.unwrap_or(2));
            cfg.seed = Some(seed());
            cfg.dt = Some(*dt);
            cfg.ode_radius = Some(*ode_radius);
        }
        Command::Scan {
            lambda_min,
            lambda_max,
            lambda_steps,
        } => {
            cfg.command = "scan".into();
            cfg.side = Some(c.side.unwrap_or(16));
            cfg.times = Some(c.t.clone().unwrap_or_else(|| vec![30.0]));
            cfg.replicas = Some(c.replicas.unwrap_or(200));
            cfg.seed = Some(seed());
            cfg.lambda_min = Some(*lambda_min);
            cfg.lambda_max = Some(*lambda_max);
            cfg.lambda_steps = Some(*lambda_steps);
        }
        Command::Verify { dt } => {
            cfg.command = "verify".into();
            cfg.lambda = Some(c.lambda.unwrap_or(0.36));
            cfg.radius = Some(c.radius.unwrap_or(8));
            cfg.times = Some(
                c.t.clone()
                    .unwrap_or_else(|| (1..=10).map(|i| 0.5 * i as f64).collect()),
            );
            cfg.dt = Some(*dt);
        }
    }
    if matches!(cli.command, Command::Simulate { .. } | Command::Moments { .. } | Command::Scan { .. } | Command::Verify { .. }) {
        let (a, b) = resolve_weights(cfg.d, c.a, c.b)?;
        cfg.a = Some(a);
        cfg.b = Some(b);
    }
    Ok(cfg)
}

fn render<R: Serialize + Tabular>(cfg: RunConfig, (results, checks): (R, Vec<Check>)) -> Result<Rendered, BoxError> {
    let format = cfg.format;
    let report = Report::new(cfg, results, checks);
    let text = match format {
        Format::Json => report.to_json()?,
        Format::Csv => report::to_csv(&report.results)?,
    };
    Ok(Rendered {
        text,
        passed: report.passed,
    })
}

/// Runs a resolved configuration.
pub fn execute(cfg: RunConfig) -> Result<Rendered, BoxError> {
    match cfg.command.as_str() {
        "gamma" => {
            let r = commands::cmd_gamma(&cfg)?;
            render(cfg, r)
        }
        "bounds" => {
            let r = commands::cmd_bounds(&cfg)?;
            render(cfg, r)
        }
        "simulate" => {
            let r = commands::cmd_simulate(&cfg)?;
            render(cfg, r)
        }
        "moments" => {
            let r = commands::cmd_moments(&cfg)?;
            render(cfg, r)
        }
        "scan" => {
            let r = commands::cmd_scan(&cfg)?;
            render(cfg, r)
        }
        "verify" => {
            let r = commands::cmd_verify(&cfg)?;
            render(cfg, r)
        }
        other => Err(format!("unknown command {other}").into()),
    }
}

/// Runs the parsed command line and writes its output. Returns whether all
/// checks passed.
pub fn run(cli: &Cli) -> Result<bool, BoxError> {
    let rendered = execute(resolve(cli)?)?;
    match &cli.common.out {
        Some(path) => std::fs::write(path, &rendered.text)?,
        None => print!("{}", rendered.text),
    }
    Ok(rendered.passed)
}
