//! Pair correlations `F_t(x) = E[xi_t(O) xi_t(x)]` of the weighted linear
//! system started from `xi_0 = 1`.
//!
//! By translation invariance they solve the closed linear system
//! `dF/dt = G_lambda F` on displacements, truncated here to a box with the
//! exterior held at its initial value 1. [`build_k`] constructs the explicit
//! strictly positive null vector `K = H + c`, and [`survival_lower_bound`]
//! turns it into the second-moment ceiling `K(O) / inf K` and the survival
//! floor `inf K / K(O)`.

mod entries;
mod integrate;
mod kvector;
mod operator;

use serde::{Deserialize, Serialize};

pub use entries::GEntries;
pub use integrate::{integrate_f, MomentField, MomentTrajectory};
pub use kvector::{build_k, c_value, residual_field, residual_gk, survival_lower_bound, KVector, SurvivalBound};
pub use operator::{build_g, GLambdaOperator};

use crate::error::{invalid, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MomentParams {
    pub d: usize,
    pub lambda: f64,
    pub a: f64,
    pub b: f64,
}

impl MomentParams {
    pub fn new(d: usize, lambda: f64, a: f64, b: f64) -> Result<Self> {
        let p = Self { d, lambda, a, b };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.d == 0 {
            return Err(invalid("dimension must be at least 1"));
        }
        for (name, v) in [("lambda", self.lambda), ("a", self.a), ("b", self.b)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(invalid(format!("{name} must be positive and finite, got {v}")));
            }
        }
        Ok(())
    }

    /// Common exponential drift rate `1 - 2 d lambda (a + b - 1)` of the linear system.
    pub fn drift(&self) -> f64 {
        1.0 - 2.0 * self.d as f64 * self.lambda * (self.a + self.b - 1.0)
    }
}
