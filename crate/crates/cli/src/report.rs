use serde::{Deserialize, Serialize};

use crate::args::{Format, MethodArg};

pub const SCHEMA_VERSION: u32 = 1;

/// Fully resolved settings of one run. Fields a subcommand does not use are
/// left out of the output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: String,
    pub d: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub times: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub replicas: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<MethodArg>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steps: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dt: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ode_radius: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_min: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_max: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_steps: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub snapshot: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<String>,
    pub format: Format,
}

impl RunConfig {
    pub fn new(command: &str, d: usize, format: Format) -> Self {
        Self {
            command: command.to_string(),
            d,
            d_max: None,
            side: None,
            lambda: None,
            a: None,
            b: None,
            times: None,
            replicas: None,
            radius: None,
            seed: None,
            method: None,
            steps: None,
            dt: None,
            ode_radius: None,
            lambda_min: None,
            lambda_max: None,
            lambda_steps: None,
            snapshot: None,
            out: None,
            format,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, passed: bool, detail: String) -> Self {
        Self {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report<R> {
    pub schema_version: u32,
    pub config: RunConfig,
    pub results: R,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl<R: Serialize> Report<R> {
    pub fn new(config: RunConfig, results: R, checks: Vec<Check>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        Self {
            schema_version: SCHEMA_VERSION,
            config,
            results,
            checks,
            passed,
        }
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}

/// Flat table view of a result set.
pub trait Tabular {
    fn header(&self) -> Vec<String>;
    fn rows(&self) -> Vec<Vec<String>>;
}

pub fn to_csv<T: Tabular>(table: &T) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(table.header())?;
    for row in table.rows() {
        w.write_record(row)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Re-emits CSV text through the same writer, for round-trip checks.
pub fn reformat_csv(text: &str) -> Result<String, csv::Error> {
    let mut r = csv::ReaderBuilder::new().has_headers(false).from_reader(text.as_bytes());
    let mut w = csv::Writer::from_writer(Vec::new());
    for rec in r.records() {
        w.write_record(&rec?)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Shortest decimal that parses back to the same `f64`, switching to
/// exponent notation for very small or large magnitudes.
pub fn num(x: f64) -> String {
    format!("{x:?}")
}

pub fn opt_num(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}
