//! Plain-Rust side of the demo, usable and testable off the browser.

use std::sync::Arc;

use cpbounds::bounds::{self, BoundSet};
use cpbounds::ips_sim::{Engine, EventChannels, ModelParams};
use cpbounds::lattice::TorusLattice;
use cpbounds::moment_ode::{build_g, build_k, integrate_f, residual_gk, MomentParams};
use cpbounds::random_walk::{self, GreenTable, QuadConfig};
use cpbounds::rng::replica_stream;
use cpbounds::Result;

/// `[gamma, alpha1, alpha2, beta, lower, optimal weight]` for dimension `d`.
pub fn bound_row(d: usize) -> Result<Vec<f64>> {
    let g = random_walk::gamma(d)?.value;
    let s = BoundSet::from_gamma(d, g)?;
    Ok(vec![s.gamma, s.alpha1, s.alpha2, s.beta, s.lower, s.optimal_a])
}

/// `1 / (2 d L(a, b))`, or `None` when `L(a, b) <= 0`.
pub fn weighted_bound(d: usize, a: f64, b: f64, gamma: f64) -> Option<f64> {
    bounds::general_upper_bound(d, a, b, gamma).ok()
}

/// A two-dimensional coupled run that can be advanced frame by frame.
pub struct Planar {
    engine: Engine,
}

impl Planar {
    pub fn new(side: usize, lambda: f64, a: f64, b: f64, seed: u64) -> Result<Self> {
        let params = ModelParams::new(2, side, lambda, a, b)?;
        let lattice = Arc::new(TorusLattice::new(2, side)?);
        let engine = Engine::new(lattice, &params, replica_stream(seed, 0), EventChannels::default())?;
        Ok(Self { engine })
    }

    pub fn advance(&mut self, dt: f64) -> Result<()> {
        let t = self.engine.time() + dt;
        self.engine.advance_to(t)
    }

    pub fn time(&self) -> f64 {
        self.engine.time()
    }

    pub fn occupied(&self) -> Vec<u8> {
        self.engine.occupied().iter().map(|&o| u8::from(o)).collect()
    }

    /// `ln xi` per site, `NaN` where `xi = 0`.
    pub fn log_xi(&self) -> Vec<f32> {
        let shift = self.engine.log_scale();
        self.engine
            .reduced()
            .iter()
            .map(|&v| if v > 0.0 { (v.ln() + shift) as f32 } else { f32::NAN })
            .collect()
    }

    pub fn density(&self) -> f64 {
        let occ = self.engine.occupied();
        occ.iter().filter(|&&o| o).count() as f64 / occ.len() as f64
    }

    pub fn mean_xi(&self) -> f64 {
        let v = self.engine.field_values();
        v.iter().sum::<f64>() / v.len() as f64
    }

    pub fn coupling_holds(&self) -> bool {
        self.engine
            .occupied()
            .iter()
            .zip(self.engine.reduced())
            .all(|(&o, &v)| o == (v > 0.0))
    }
}

/// `[c, ceiling, floor, threshold, residual]` for the null vector on a
/// radius-`radius` box.
pub fn null_vector_summary(d: usize, lambda: f64, a: f64, b: f64, radius: usize) -> Result<Vec<f64>> {
    let p = MomentParams::new(d, lambda, a, b)?;
    let table = GreenTable::quadrature(d, radius, &QuadConfig::default())?;
    let k = build_k(&p, &table, radius)?;
    let residual = residual_gk(&build_g(&p, radius)?, &k)?;
    Ok(vec![k.c, k.ceiling(), k.floor(), k.threshold, residual])
}

/// `F_t(O)` at `samples` evenly spaced times in `(0, t_max]`, interleaved as
/// `[t_1, F_1, t_2, F_2, ...]`.
pub fn origin_curve(d: usize, lambda: f64, a: f64, b: f64, radius: usize, t_max: f64, samples: usize) -> Result<Vec<f64>> {
    let p = MomentParams::new(d, lambda, a, b)?;
    let op = build_g(&p, radius)?;
    let times: Vec<f64> = (1..=samples).map(|i| t_max * i as f64 / samples as f64).collect();
    let dt = (0.4 / op.max_row_norm()).min(0.02);
    let traj = integrate_f(&op, &times, dt)?;
    Ok(traj
        .origin_series(op.displacement_box().origin())
        .into_iter()
        .flat_map(|(t, f)| [t, f])
        .collect())
}
