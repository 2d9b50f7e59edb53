//! Return probability, Green function and hitting function of the simple
//! random walk on `Z^d`.
//!
//! `G(x)` is the expected number of visits to `x` from the origin,
//! `gamma = 1 / G(0)` is the probability of never returning, and
//! `H(x) = G(x) / G(0)` is the probability of ever reaching the origin from `x`.

mod bessel;
mod enumerate;
mod mc;
mod quadrature;
mod solver;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use bessel::scaled_bessel_i_seq;
pub use enumerate::{four_step_closed_form, four_step_return};
pub use mc::gamma_mc;
pub use quadrature::{gauss_legendre, QuadConfig};
pub use solver::{gamma_solver, hitting_solver, HittingSolution};

use crate::error::{invalid, Error, Result};
use crate::lattice::{canonical_key, DisplacementBox};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GammaMethod {
    Quadrature,
    Mc,
    Solver,
}

/// Known sign of the systematic error of an estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Bias {
    /// Error bound is symmetric.
    None,
    /// The estimate is at least the true value.
    Upward,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GammaEstimate {
    pub d: usize,
    pub value: f64,
    /// Quadrature error bound, MC standard error, or solver bias bound.
    pub error: f64,
    pub method: GammaMethod,
    pub bias: Bias,
}

impl GammaEstimate {
    pub fn z_score(&self, other: f64) -> f64 {
        (self.value - other).abs() / self.error
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GreenValue {
    pub value: f64,
    pub error: f64,
}

fn check_transient(dim: usize) -> Result<()> {
    if dim < 3 {
        Err(Error::Transience { d: dim })
    } else {
        Ok(())
    }
}

/// `G(x)` by quadrature.
pub fn green_function(dim: usize, x: &[i64], cfg: &QuadConfig) -> Result<GreenValue> {
    check_transient(dim)?;
    if x.len() != dim {
        return Err(invalid(format!("displacement has {} coordinates, expected {dim}", x.len())));
    }
    let (values, error) = quadrature::green_integrals(dim, &[canonical_key(x)], cfg)?;
    Ok(GreenValue {
        value: values[0],
        error,
    })
}

/// `gamma_d = 1 / G(0)` by quadrature.
pub fn gamma(dim: usize) -> Result<GammaEstimate> {
    gamma_with(dim, &QuadConfig::default())
}

pub fn gamma_with(dim: usize, cfg: &QuadConfig) -> Result<GammaEstimate> {
    let g0 = green_function(dim, &vec![0; dim], cfg)?;
    Ok(GammaEstimate {
        d: dim,
        value: 1.0 / g0.value,
        error: g0.error / (g0.value * g0.value),
        method: GammaMethod::Quadrature,
        bias: Bias::None,
    })
}

/// `H(x) = G(x) / G(0)`.
pub fn hitting_probability(dim: usize, x: &[i64]) -> Result<f64> {
    check_transient(dim)?;
    if x.len() != dim {
        return Err(invalid(format!("displacement has {} coordinates, expected {dim}", x.len())));
    }
    let keys = [vec![0; dim], canonical_key(x)];
    let (values, _) = quadrature::green_integrals(dim, &keys, &QuadConfig::default())?;
    Ok(values[1] / values[0])
}

/// `G` and `H` on every displacement of a box.
#[derive(Debug, Clone)]
pub struct GreenTable {
    dim: usize,
    bx: DisplacementBox,
    green: Vec<f64>,
    hitting: Vec<f64>,
    /// Bound on the error of each `G` value.
    pub green_error: f64,
    /// Bound on the error of each `H` value.
    pub hitting_error: f64,
    pub method: GammaMethod,
}

impl GreenTable {
    pub fn quadrature(dim: usize, radius: usize, cfg: &QuadConfig) -> Result<Self> {
        check_transient(dim)?;
        let bx = DisplacementBox::new(dim, radius)?;
        let mut slots: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
        let mut slot_of = Vec::with_capacity(bx.len());
        for idx in 0..bx.len() {
            let key = canonical_key(&bx.displacement(idx));
            let next = slots.len();
            slot_of.push(*slots.entry(key).or_insert(next));
        }
        let mut keys = vec![Vec::new(); slots.len()];
        for (key, &slot) in &slots {
            keys[slot] = key.clone();
        }
        let (values, error) = quadrature::green_integrals(dim, &keys, cfg)?;
        let green: Vec<f64> = slot_of.iter().map(|&s| values[s]).collect();
        let g0 = green[bx.origin()];
        let hitting = green.iter().map(|g| g / g0).collect();
        Ok(Self {
            dim,
            bx,
            green,
            hitting,
            green_error: error,
            hitting_error: 2.0 * error / g0,
            method: GammaMethod::Quadrature,
        })
    }

    /// Builds a table from given `H` values (for synthetic and perturbed inputs).
    /// `G` is reconstructed as `H / gamma` with `gamma = 1 - H(e_1)`.
    pub fn from_hitting(bx: DisplacementBox, hitting: Vec<f64>, hitting_error: f64) -> Result<Self> {
        if hitting.len() != bx.len() {
            return Err(invalid("hitting values do not match the box"));
        }
        let gamma = 1.0 - hitting[bx.unit(0, true)];
        let green = hitting.iter().map(|h| h / gamma).collect();
        Ok(Self {
            dim: bx.dim(),
            bx,
            green,
            hitting,
            green_error: hitting_error / gamma,
            hitting_error,
            method: GammaMethod::Quadrature,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn displacement_box(&self) -> &DisplacementBox {
        &self.bx
    }

    pub fn green(&self, x: &[i64]) -> Option<f64> {
        self.bx.index_of(x).map(|i| self.green[i])
    }

    pub fn hitting(&self, x: &[i64]) -> Option<f64> {
        self.bx.index_of(x).map(|i| self.hitting[i])
    }

    pub fn green_values(&self) -> &[f64] {
        &self.green
    }

    pub fn hitting_values(&self) -> &[f64] {
        &self.hitting
    }

    /// `gamma = 1 / G(0)`.
    pub fn gamma(&self) -> f64 {
        1.0 / self.green[self.bx.origin()]
    }
}
