use std::sync::Arc;

use rand::Rng;
use rand_distr::Exp1;
use serde::{Deserialize, Serialize};

use super::ModelParams;
use crate::error::{invalid, Error, Result};
use crate::lattice::TorusLattice;
use crate::rng::{replica_stream, StreamRng};

/// Reduced values above `2^RESCALE_BITS` trigger a global rescale.
const RESCALE_BITS: i32 = 512;

/// Which event types act on the state. Disabled events are still drawn, so
/// the stream is unchanged; they just do nothing. Both are on by default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EventChannels {
    pub recovery: bool,
    pub infection: bool,
}

impl Default for EventChannels {
    fn default() -> Self {
        Self {
            recovery: true,
            infection: true,
        }
    }
}

/// One coupled trajectory. Replicas share one lattice through the `Arc`.
pub struct Engine {
    lattice: Arc<TorusLattice>,
    params: ModelParams,
    channels: EventChannels,
    per_site_rate: f64,
    total_rate: f64,
    occupied: Vec<bool>,
    reduced: Vec<f64>,
    exp2: i32,
    time: f64,
    next_event: f64,
    events: u64,
    rng: StreamRng,
}

impl Engine {
    /// All sites start at `eta = 1`, `xi = 1`.
    pub fn new(lattice: Arc<TorusLattice>, params: &ModelParams, rng: StreamRng, channels: EventChannels) -> Result<Self> {
        params.validate()?;
        if lattice.dim() != params.d || lattice.side() != params.side {
            return Err(invalid("lattice does not match the model parameters"));
        }
        let n = lattice.num_sites();
        let per_site_rate = 1.0 + 2.0 * params.d as f64 * params.lambda;
        let mut engine = Self {
            lattice,
            params: *params,
            channels,
            per_site_rate,
            total_rate: n as f64 * per_site_rate,
            occupied: vec![true; n],
            reduced: vec![1.0; n],
            exp2: 0,
            time: 0.0,
            next_event: 0.0,
            events: 0,
            rng,
        };
        engine.next_event = engine.waiting_time();
        Ok(engine)
    }

    fn waiting_time(&mut self) -> f64 {
        let e: f64 = self.rng.sample(Exp1);
        e / self.total_rate
    }

    pub fn lattice(&self) -> &TorusLattice {
        &self.lattice
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    pub fn events(&self) -> u64 {
        self.events
    }

    pub fn occupied(&self) -> &[bool] {
        &self.occupied
    }

    /// `v` with `xi = v e^{log_scale}`.
    pub fn reduced(&self) -> &[f64] {
        &self.reduced
    }

    /// `k ln 2 + delta t`.
    pub fn log_scale(&self) -> f64 {
        self.exp2 as f64 * std::f64::consts::LN_2 + self.params.drift() * self.time
    }

    /// Current `xi` values.
    pub fn field_values(&self) -> Vec<f64> {
        let f = self.log_scale().exp();
        self.reduced.iter().map(|v| v * f).collect()
    }

    /// Applies every event with time at most `t`, then sets the clock to `t`.
    pub fn advance_to(&mut self, t: f64) -> Result<()> {
        if !(t >= self.time) {
            return Err(invalid(format!("cannot advance from {} back to {t}", self.time)));
        }
        while self.next_event <= t {
            self.time = self.next_event;
            self.apply_event()?;
            self.next_event = self.time + self.waiting_time();
        }
        self.time = t;
        Ok(())
    }

    fn apply_event(&mut self) -> Result<()> {
        self.events += 1;
        let n = self.occupied.len();
        let x = self.rng.random_range(0..n);
        let u = self.rng.random::<f64>() * self.per_site_rate;
        if u < 1.0 {
            if self.channels.recovery {
                self.occupied[x] = false;
                self.reduced[x] = 0.0;
            }
            return Ok(());
        }
        let deg = self.lattice.degree();
        let slot = (((u - 1.0) / self.params.lambda) as usize).min(deg - 1);
        let y = self.lattice.neighbor(x, slot);
        if !self.channels.infection {
            return Ok(());
        }
        self.occupied[x] |= self.occupied[y];
        let v = self.params.b * self.reduced[x] + self.params.a * self.reduced[y];
        self.reduced[x] = v;
        if v > 0.0 && v < f64::MIN_POSITIVE {
            return Err(Error::NumericRange(format!(
                "value at site {x} underflowed to {v:e} at t = {} after {} events",
                self.time, self.events
            )));
        }
        if !v.is_finite() {
            return Err(Error::NumericRange(format!(
                "value at site {x} is {v} at t = {} after {} events",
                self.time, self.events
            )));
        }
        if v > 2f64.powi(RESCALE_BITS) {
            self.rescale()?;
        }
        Ok(())
    }

    fn rescale(&mut self) -> Result<()> {
        let f = 2f64.powi(-RESCALE_BITS);
        for (i, v) in self.reduced.iter_mut().enumerate() {
            let was_positive = *v > 0.0;
            *v *= f;
            if was_positive && *v < f64::MIN_POSITIVE {
                return Err(Error::NumericRange(format!(
                    "rescaling by 2^-{RESCALE_BITS} pushed site {i} below the normal range at t = {}; \
                     values span too many orders of magnitude",
                    self.time
                )));
            }
        }
        self.exp2 += RESCALE_BITS;
        Ok(())
    }

    pub fn contact_snapshot(&self) -> ContactSnapshot {
        ContactSnapshot {
            time: self.time,
            occupied: self.occupied.clone(),
        }
    }

    pub fn field_snapshot(&self) -> FieldSnapshot {
        FieldSnapshot {
            time: self.time,
            log_scale: self.log_scale(),
            reduced: self.reduced.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContactSnapshot {
    pub time: f64,
    pub occupied: Vec<bool>,
}

/// `xi = reduced * e^{log_scale}` at one time.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FieldSnapshot {
    pub time: f64,
    pub log_scale: f64,
    pub reduced: Vec<f64>,
}

impl FieldSnapshot {
    pub fn values(&self) -> Vec<f64> {
        let f = self.log_scale.exp();
        self.reduced.iter().map(|v| v * f).collect()
    }

    /// `1{xi(x) > 0}`.
    pub fn indicator(&self) -> Vec<bool> {
        self.reduced.iter().map(|&v| v > 0.0).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoupledRun {
    pub params: ModelParams,
    pub seed: u64,
    pub replica: u64,
    pub events: u64,
    pub contact: Vec<ContactSnapshot>,
    pub fields: Vec<FieldSnapshot>,
}

impl CoupledRun {
    /// Whether `eta = 1{xi > 0}` at every snapshot, compared bitwise.
    pub fn coupling_holds(&self) -> bool {
        self.contact
            .iter()
            .zip(&self.fields)
            .all(|(c, f)| c.occupied == f.indicator())
    }
}

/// Runs replica 0 of `seed` and records both fields at each of `times`.
pub fn simulate_coupled(params: &ModelParams, times: &[f64], seed: u64) -> Result<CoupledRun> {
    simulate_coupled_with(params, times, seed, 0, EventChannels::default())
}

pub fn simulate_coupled_with(
    params: &ModelParams,
    times: &[f64],
    seed: u64,
    replica: u64,
    channels: EventChannels,
) -> Result<CoupledRun> {
    check_times(times)?;
    let lattice = Arc::new(params.lattice()?);
    let mut engine = Engine::new(lattice, params, replica_stream(seed, replica), channels)?;
    let mut contact = Vec::with_capacity(times.len());
    let mut fields = Vec::with_capacity(times.len());
    for &t in times {
        engine.advance_to(t)?;
        contact.push(engine.contact_snapshot());
        fields.push(engine.field_snapshot());
    }
    Ok(CoupledRun {
        params: *params,
        seed,
        replica,
        events: engine.events(),
        contact,
        fields,
    })
}

pub(crate) fn check_times(times: &[f64]) -> Result<()> {
    if times.is_empty() {
        return Err(invalid("at least one time is required"));
    }
    if times.iter().any(|t| !(*t >= 0.0 && t.is_finite())) {
        return Err(invalid("times must be finite and non-negative"));
    }
    if times.windows(2).any(|w| w[1] < w[0]) {
        return Err(invalid("times must be sorted"));
    }
    Ok(())
}
