//! Contact process and weighted linear system on a torus, driven by one
//! graphical-representation event stream.
//!
//! Events arrive at total rate `N (1 + 2 d lambda)` for `N` sites. Each picks
//! a site `x` uniformly; with probability `1 / (1 + 2 d lambda)` it is a
//! recovery mark at `x`, otherwise an arrow into `x` from a uniformly chosen
//! neighbor `y`. The contact process sets `eta(x) = max(eta(x), eta(y))` on an
//! arrow and `eta(x) = 0` on a recovery; the linear system sets
//! `xi(x) = b xi(x) + a xi(y)` and `xi(x) = 0` respectively, and between
//! events every `xi` grows by the common factor `e^{1 - 2 d lambda (a + b - 1)}`
//! per unit time.
//!
//! The common factor is never applied site by site. The engine stores
//! `xi(x) = v(x) 2^k e^{delta t}` with a shared exponent `k` that absorbs
//! renormalisations, so `v` only changes at events and the drift is exact.

mod engine;
mod estimate;

use serde::{Deserialize, Serialize};

pub use engine::{simulate_coupled, simulate_coupled_with, ContactSnapshot, CoupledRun, Engine, EventChannels, FieldSnapshot};
pub use estimate::{
    estimate_moments, estimate_survival, estimate_survival_curve, DisplacementEstimate, MomentEstimate, SurvivalEstimate,
};

use crate::error::{invalid, Result};
use crate::lattice::TorusLattice;
use crate::moment_ode::MomentParams;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub d: usize,
    /// Torus side `L`; even and at least 4.
    pub side: usize,
    /// Infection rate per directed edge. Zero gives the pure death process.
    pub lambda: f64,
    pub a: f64,
    pub b: f64,
}

impl ModelParams {
    pub fn new(d: usize, side: usize, lambda: f64, a: f64, b: f64) -> Result<Self> {
        let p = Self { d, side, lambda, a, b };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.d == 0 {
            return Err(invalid("dimension must be at least 1"));
        }
        if self.side < 4 || !self.side.is_multiple_of(2) {
            return Err(invalid(format!("torus side must be even and >= 4, got {}", self.side)));
        }
        if !(self.lambda >= 0.0 && self.lambda.is_finite()) {
            return Err(invalid(format!("lambda must be non-negative and finite, got {}", self.lambda)));
        }
        for (name, v) in [("a", self.a), ("b", self.b)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(invalid(format!("{name} must be positive and finite, got {v}")));
            }
        }
        Ok(())
    }

    pub fn lattice(&self) -> Result<TorusLattice> {
        TorusLattice::new(self.d, self.side)
    }

    /// `1 - 2 d lambda (a + b - 1)`.
    pub fn drift(&self) -> f64 {
        1.0 - 2.0 * self.d as f64 * self.lambda * (self.a + self.b - 1.0)
    }
}

impl TryFrom<&ModelParams> for MomentParams {
    type Error = crate::Error;

    fn try_from(p: &ModelParams) -> Result<Self> {
        MomentParams::new(p.d, p.lambda, p.a, p.b)
    }
}
