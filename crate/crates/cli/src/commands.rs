use cpbounds::bounds::{self, BoundSet};
use cpbounds::ips_sim::{
    estimate_moments, estimate_survival_curve, simulate_coupled, MomentEstimate, ModelParams, SurvivalEstimate,
};
use cpbounds::moment_ode::{build_g, build_k, integrate_f, residual_gk, MomentParams};
use cpbounds::random_walk::{gamma, gamma_mc, gamma_solver, Bias, GammaEstimate, GammaMethod, GreenTable, QuadConfig};
use cpbounds::Error;
use serde::{Deserialize, Serialize};

use crate::args::MethodArg;
use crate::report::{num, opt_num, Check, RunConfig, Tabular};

pub type BoxError = Box<dyn std::error::Error + Send + Sync>;

/// Optimal weights `a = b = 1 / (2 - gamma_d)` unless overridden.
pub fn resolve_weights(d: usize, a: Option<f64>, b: Option<f64>) -> Result<(f64, f64), BoxError> {
    match (a, b) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => {
            let g = gamma(d)?.value;
            let (wa, wb) = bounds::optimal_ab(g)?;
            Ok((a.unwrap_or(wa), b.unwrap_or(wb)))
        }
    }
}

// gamma

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GammaResults {
    pub estimates: Vec<GammaEstimate>,
}

impl Tabular for GammaResults {
    fn header(&self) -> Vec<String> {
        ["d", "method", "value", "error", "bias"].map(String::from).to_vec()
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.estimates
            .iter()
            .map(|e| {
                vec![
                    e.d.to_string(),
                    method_name(e.method).to_string(),
                    num(e.value),
                    num(e.error),
                    match e.bias {
                        Bias::None => "none",
                        Bias::Upward => "upward",
                    }
                    .to_string(),
                ]
            })
            .collect()
    }
}

fn method_name(m: GammaMethod) -> &'static str {
    match m {
        GammaMethod::Quadrature => "quadrature",
        GammaMethod::Mc => "mc",
        GammaMethod::Solver => "solver",
    }
}

pub fn cmd_gamma(cfg: &RunConfig) -> Result<(GammaResults, Vec<Check>), BoxError> {
    let method = cfg.method.unwrap_or(MethodArg::All);
    let want = |m: MethodArg| method == m || method == MethodArg::All;
    let mut estimates = Vec::new();
    let quad = gamma(cfg.d)?;
    if want(MethodArg::Quadrature) {
        estimates.push(quad);
    }
    if want(MethodArg::Mc) {
        let seed = cfg.seed.expect("seed is resolved");
        estimates.push(gamma_mc(
            cfg.d,
            cfg.steps.expect("steps are resolved") as u64,
            cfg.replicas.expect("replicas are resolved") as u64,
            seed,
        )?);
    }
    if want(MethodArg::Solver) {
        estimates.push(gamma_solver(cfg.d, cfg.radius.expect("radius is resolved"))?);
    }
    let mut checks = vec![Check::new(
        "quadrature accuracy",
        quad.error <= 1e-9,
        format!("error bound {:e}", quad.error),
    )];
    for e in estimates.iter().filter(|e| e.method != GammaMethod::Quadrature) {
        // upward-biased estimates: value - error <= gamma <= value (+ noise for MC)
        let (lo, hi) = match e.method {
            GammaMethod::Mc => (f64::NEG_INFINITY, e.value + 3.0 * e.error),
            _ => (e.value - e.error - quad.error, e.value + quad.error),
        };
        checks.push(Check::new(
            &format!("{} consistent with quadrature", method_name(e.method)),
            quad.value >= lo && quad.value <= hi,
            format!("quadrature {} vs {} {} (error {})", num(quad.value), method_name(e.method), num(e.value), num(e.error)),
        ));
    }
    Ok((GammaResults { estimates }, checks))
}

// bounds

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightedBound {
    pub d: usize,
    pub a: f64,
    pub b: f64,
    pub l_value: f64,
    /// `1 / (2 d L(a, b))`, absent when `L(a, b) <= 0`.
    pub upper_bound: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsResults {
    pub rows: Vec<BoundSet>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub weighted: Vec<WeightedBound>,
}

impl Tabular for BoundsResults {
    fn header(&self) -> Vec<String> {
        let mut h: Vec<String> = ["d", "gamma", "alpha1", "alpha2", "beta", "lower", "optimal_a", "optimal_b"]
            .map(String::from)
            .to_vec();
        if !self.weighted.is_empty() {
            h.extend(["a", "b", "l_value", "weighted_bound"].map(String::from));
        }
        h
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let mut row = vec![
                    s.d.to_string(),
                    num(s.gamma),
                    num(s.alpha1),
                    num(s.alpha2),
                    num(s.beta),
                    num(s.lower),
                    num(s.optimal_a),
                    num(s.optimal_b),
                ];
                if let Some(w) = self.weighted.get(i) {
                    row.extend([num(w.a), num(w.b), num(w.l_value), opt_num(w.upper_bound)]);
                }
                row
            })
            .collect()
    }
}

pub fn cmd_bounds(cfg: &RunConfig) -> Result<(BoundsResults, Vec<Check>), BoxError> {
    let d_max = cfg.d_max.unwrap_or(cfg.d);
    let rows = bounds::bound_table(cfg.d, d_max).or_else(|e| match e {
        // keep the rows and let the ordering check report the failure
        Error::NumericRange(_) => (cfg.d..=d_max)
            .map(|d| BoundSet::from_gamma(d, gamma(d)?.value))
            .collect::<Result<Vec<_>, _>>(),
        other => Err(other),
    })?;
    let mut checks = Vec::new();
    for s in &rows {
        checks.push(Check::new(
            &format!("ordering d={}", s.d),
            s.ordering_holds(),
            format!(
                "lower {} < beta {} < min(alpha1 {}, alpha2 {})",
                num(s.lower),
                num(s.beta),
                num(s.alpha1),
                num(s.alpha2)
            ),
        ));
    }
    let mut weighted = Vec::new();
    if cfg.a.is_some() || cfg.b.is_some() {
        for s in &rows {
            let (a, b) = (cfg.a.unwrap_or(s.optimal_a), cfg.b.unwrap_or(s.optimal_b));
            let l = bounds::l_value(a, b, s.gamma)?;
            let upper = match bounds::general_upper_bound(s.d, a, b, s.gamma) {
                Ok(v) => Some(v),
                Err(Error::ConditionViolated { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            checks.push(Check::new(
                &format!("weights admissible d={}", s.d),
                upper.is_some(),
                format!("L(a, b) = {}", num(l)),
            ));
            weighted.push(WeightedBound {
                d: s.d,
                a,
                b,
                l_value: l,
                upper_bound: upper,
            });
        }
    }
    Ok((BoundsResults { rows, weighted }, checks))
}

// simulate

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulateResults {
    pub survival: Vec<SurvivalEstimate>,
    /// Events processed by replica 0 up to the last time.
    pub events_replica0: u64,
    pub coupling_holds: bool,
}

impl Tabular for SimulateResults {
    fn header(&self) -> Vec<String> {
        ["time", "survival", "std_error", "replicas", "side"].map(String::from).to_vec()
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.survival
            .iter()
            .map(|s| vec![num(s.time), num(s.value), num(s.std_error), s.replicas.to_string(), s.side.to_string()])
            .collect()
    }
}

pub fn model_params(cfg: &RunConfig) -> Result<ModelParams, BoxError> {
    Ok(ModelParams::new(
        cfg.d,
        cfg.side.expect("side is resolved"),
        cfg.lambda.expect("lambda is resolved"),
        cfg.a.expect("a is resolved"),
        cfg.b.expect("b is resolved"),
    )?)
}

pub fn cmd_simulate(cfg: &RunConfig) -> Result<(SimulateResults, Vec<Check>), BoxError> {
    let p = model_params(cfg)?;
    let times = cfg.times.clone().expect("times are resolved");
    let seed = cfg.seed.expect("seed is resolved");
    let survival = estimate_survival_curve(&p, &times, cfg.replicas.expect("replicas are resolved"), seed)?;
    let run = simulate_coupled(&p, &times, seed)?;
    let coupling_holds = run.coupling_holds();
    if let Some(path) = &cfg.snapshot {
        let (c, f) = (run.contact.last().unwrap(), run.fields.last().unwrap());
        let mut w = csv::Writer::from_path(path)?;
        w.write_record(["site", "eta", "xi"])?;
        for (i, (eta, xi)) in c.occupied.iter().zip(f.values()).enumerate() {
            w.write_record([i.to_string(), u8::from(*eta).to_string(), num(xi)])?;
        }
        w.flush()?;
    }
    let checks = vec![Check::new(
        "coupling",
        coupling_holds,
        format!("eta = 1{{xi > 0}} at {} snapshots of replica 0", times.len()),
    )];
    Ok((
        SimulateResults {
            survival,
            events_replica0: run.events,
            coupling_holds,
        },
        checks,
    ))
}

// moments

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OdeComparison {
    pub time: f64,
    pub displacement: Vec<i64>,
    pub mc: f64,
    pub std_error: f64,
    pub ode: f64,
    /// `|mc - ode| / std_error`; absent when the standard error is zero.
    pub z: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentsResults {
    pub estimates: Vec<MomentEstimate>,
    pub comparisons: Vec<OdeComparison>,
    pub ode_error: f64,
}

impl Tabular for MomentsResults {
    fn header(&self) -> Vec<String> {
        ["time", "displacement", "mc", "std_error", "ode", "z"].map(String::from).to_vec()
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let mut rows = Vec::new();
        for e in &self.estimates {
            rows.push(vec![
                num(e.time),
                "mean".to_string(),
                num(e.mean.value),
                num(e.mean.std_error),
                "1".to_string(),
                String::new(),
            ]);
        }
        for c in &self.comparisons {
            let x: Vec<String> = c.displacement.iter().map(|v| v.to_string()).collect();
            rows.push(vec![
                num(c.time),
                x.join(" "),
                num(c.mc),
                num(c.std_error),
                num(c.ode),
                opt_num(c.z),
            ]);
        }
        rows
    }
}

fn z_score(value: f64, want: f64, se: f64) -> Option<f64> {
    (se > 0.0).then(|| (value - want).abs() / se)
}

pub fn cmd_moments(cfg: &RunConfig) -> Result<(MomentsResults, Vec<Check>), BoxError> {
    let p = model_params(cfg)?;
    let times = cfg.times.clone().expect("times are resolved");
    let radius = cfg.radius.expect("radius is resolved");
    let estimates = estimate_moments(
        &p,
        &times,
        radius,
        cfg.replicas.expect("replicas are resolved"),
        cfg.seed.expect("seed is resolved"),
    )?;
    let ode_radius = cfg.ode_radius.expect("ode radius is resolved").max(radius + 1);
    let op = build_g(&MomentParams::try_from(&p)?, ode_radius)?;
    let traj = integrate_f(&op, &times, cfg.dt.expect("dt is resolved"))?;
    let bx = op.displacement_box();
    let mut comparisons = Vec::new();
    let mut checks = Vec::new();
    for (est, field) in estimates.iter().zip(&traj.fields) {
        let mean_ok = match z_score(est.mean.value, 1.0, est.mean.std_error) {
            Some(z) => z < 3.0,
            None => est.mean.value == 1.0,
        };
        checks.push(Check::new(
            &format!("mean t={}", num(est.time)),
            mean_ok,
            format!("{} +- {}", num(est.mean.value), num(est.mean.std_error)),
        ));
        let mut worst = 0.0_f64;
        let mut exact_ok = true;
        for e in &est.second {
            let ode = field.values[bx.index_of(&e.displacement).expect("estimate box lies inside the ODE box")];
            let z = z_score(e.value, ode, e.std_error);
            match z {
                Some(z) => worst = worst.max(z),
                None => exact_ok &= (e.value - ode).abs() <= 1e-12,
            }
            comparisons.push(OdeComparison {
                time: est.time,
                displacement: e.displacement.clone(),
                mc: e.value,
                std_error: e.std_error,
                ode,
                z,
            });
        }
        checks.push(Check::new(
            &format!("second moments vs ODE t={}", num(est.time)),
            worst < 3.0 && exact_ok,
            format!("largest z-score {}", num(worst)),
        ));
    }
    Ok((
        MomentsResults {
            estimates,
            comparisons,
            ode_error: traj.error_estimate,
        },
        checks,
    ))
}

// scan

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanPoint {
    pub lambda: f64,
    pub survival: Vec<SurvivalEstimate>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanResults {
    pub points: Vec<ScanPoint>,
}

impl Tabular for ScanResults {
    fn header(&self) -> Vec<String> {
        ["lambda", "time", "survival", "std_error", "replicas", "side"].map(String::from).to_vec()
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.points
            .iter()
            .flat_map(|p| {
                p.survival.iter().map(move |s| {
                    vec![
                        num(p.lambda),
                        num(s.time),
                        num(s.value),
                        num(s.std_error),
                        s.replicas.to_string(),
                        s.side.to_string(),
                    ]
                })
            })
            .collect()
    }
}

pub fn lambda_grid(min: f64, max: f64, steps: usize) -> Vec<f64> {
    if steps <= 1 {
        return vec![min];
    }
    (0..steps)
        .map(|i| {
            let x = min + (max - min) * i as f64 / (steps - 1) as f64;
            // drop representation noise such as 0.30000000000000004
            (x * 1e12).round() / 1e12
        })
        .collect()
}

pub fn cmd_scan(cfg: &RunConfig) -> Result<(ScanResults, Vec<Check>), BoxError> {
    let (lo, hi) = (cfg.lambda_min.unwrap(), cfg.lambda_max.unwrap());
    if !(lo >= 0.0 && hi > lo) {
        return Err(format!("need 0 <= lambda-min < lambda-max, got {lo} and {hi}").into());
    }
    let times = cfg.times.clone().expect("times are resolved");
    let seed = cfg.seed.expect("seed is resolved");
    let replicas = cfg.replicas.expect("replicas are resolved");
    let mut points = Vec::new();
    for lambda in lambda_grid(lo, hi, cfg.lambda_steps.unwrap()) {
        let p = ModelParams::new(cfg.d, cfg.side.unwrap(), lambda, cfg.a.unwrap(), cfg.b.unwrap())?;
        points.push(ScanPoint {
            lambda,
            survival: estimate_survival_curve(&p, &times, replicas, seed)?,
        });
    }
    let (first, last) = (points.first().unwrap().survival.last().unwrap(), points.last().unwrap().survival.last().unwrap());
    let se = (first.std_error.powi(2) + last.std_error.powi(2)).sqrt();
    let checks = vec![Check::new(
        "survival increases across the grid",
        last.value - first.value > 3.0 * se,
        format!(
            "t={}: {} at lambda={} vs {} at lambda={} (combined SE {})",
            num(last.time),
            num(last.value),
            num(hi),
            num(first.value),
            num(lo),
            num(se)
        ),
    )];
    Ok((ScanResults { points }, checks))
}

// verify

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TimeValue {
    pub time: f64,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyResults {
    pub gamma: f64,
    pub l_value: f64,
    pub threshold: f64,
    pub c: f64,
    pub inf_k: f64,
    pub k_origin: f64,
    pub box_min_k: f64,
    pub ceiling: f64,
    pub floor: f64,
    pub residual: f64,
    pub integrator_error: f64,
    pub f_origin_trajectory: Vec<TimeValue>,
}

impl Tabular for VerifyResults {
    fn header(&self) -> Vec<String> {
        ["time", "f_origin", "ceiling", "residual", "c", "threshold"].map(String::from).to_vec()
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.f_origin_trajectory
            .iter()
            .map(|tv| {
                vec![
                    num(tv.time),
                    num(tv.value),
                    num(self.ceiling),
                    num(self.residual),
                    num(self.c),
                    num(self.threshold),
                ]
            })
            .collect()
    }
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<(VerifyResults, Vec<Check>), BoxError> {
    let radius = cfg.radius.expect("radius is resolved");
    let p = MomentParams::new(cfg.d, cfg.lambda.unwrap(), cfg.a.unwrap(), cfg.b.unwrap())?;
    let table = GreenTable::quadrature(cfg.d, radius, &QuadConfig::default())?;
    let k = build_k(&p, &table, radius)?;
    let op = build_g(&p, radius)?;
    let residual = residual_gk(&op, &k)?;
    let times = cfg.times.clone().expect("times are resolved");
    let traj = integrate_f(&op, &times, cfg.dt.unwrap())?;
    let f_origin_trajectory: Vec<TimeValue> = traj
        .origin_series(op.displacement_box().origin())
        .into_iter()
        .map(|(time, value)| TimeValue { time, value })
        .collect();
    let peak = f_origin_trajectory.iter().map(|tv| tv.value).fold(f64::NEG_INFINITY, f64::max);
    let checks = vec![
        Check::new("null vector residual", residual < 1e-6, format!("max |G K| = {}", num(residual))),
        Check::new(
            "second-moment ceiling",
            peak <= k.ceiling() + 1e-6,
            format!("max F_t(O) = {} vs K(O)/inf K = {}", num(peak), num(k.ceiling())),
        ),
    ];
    Ok((
        VerifyResults {
            gamma: k.gamma,
            l_value: k.l_value,
            threshold: k.threshold,
            c: k.c,
            inf_k: k.inf_k,
            k_origin: k.k_origin,
            box_min_k: k.box_min,
            ceiling: k.ceiling(),
            floor: k.floor(),
            residual,
            integrator_error: traj.error_estimate,
            f_origin_trajectory,
        },
        checks,
    ))
}
