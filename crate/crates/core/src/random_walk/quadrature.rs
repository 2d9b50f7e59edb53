//! Green function of the simple random walk as a one-dimensional integral.
//!
//! Running the walk in continuous time with unit jump rate gives
//! `P_t(x) = prod_i e^{-t/d} I_{x_i}(t/d)`, and each visit to `x` lasts one unit
//! of time on average, so
//!
//! ```text
//! G(x) = int_0^inf prod_i e^{-u/d} I_{x_i}(u/d) du.
//! ```
//!
//! The integrand decays like `(d / (2 pi u))^{d/2}`. It is integrated with
//! composite Gauss-Legendre on `[0, 1]` and in `s = ln u` on `[1, U]`; the
//! remainder past `U` is integrated term by term from the Hankel expansion.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::bessel::{asymptotic_coefficients, scaled_bessel_i_seq};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadConfig {
    /// Gauss-Legendre points per panel.
    pub order: usize,
    /// Panels per unit of `ln u` on the coarse pass.
    pub panels_per_unit: f64,
    /// Largest acceptable error estimate.
    pub tolerance: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            order: 16,
            panels_per_unit: 2.0,
            tolerance: 1e-9,
        }
    }
}

const TAIL_TERMS: usize = 8;

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = x;
        nodes[n - 1 - i] = -x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[n - 1 - i] = weights[i];
    }
    (nodes, weights)
}

/// Green function values for each key (sorted absolute displacement), with
/// a shared error estimate.
pub(crate) fn green_integrals(dim: usize, keys: &[Vec<u64>], cfg: &QuadConfig) -> Result<(Vec<f64>, f64)> {
    if cfg.order == 0 || !(cfg.panels_per_unit > 0.0) || !(cfg.tolerance > 0.0) {
        return Err(Error::InvalidInput(format!("bad quadrature settings {cfg:?}")));
    }
    let kmax = keys.iter().flatten().copied().max().unwrap_or(0) as usize;
    let z_tail = 1e4_f64.max(100.0 * (kmax * kmax) as f64);
    let u_tail = dim as f64 * z_tail;
    let rule = gauss_legendre(cfg.order);

    let coarse = integrate_body(dim, keys, kmax, u_tail, cfg.panels_per_unit, &rule);
    let fine = integrate_body(dim, keys, kmax, u_tail, 2.0 * cfg.panels_per_unit, &rule);

    let mut values = Vec::with_capacity(keys.len());
    let mut error = 0.0_f64;
    for (i, key) in keys.iter().enumerate() {
        let (tail, tail_err) = asymptotic_tail(dim, key, z_tail);
        let body_err = (fine[i] - coarse[i]).abs();
        error = error.max(body_err + tail_err);
        values.push(fine[i] + tail);
    }
    if !(error <= cfg.tolerance) {
        return Err(Error::Accuracy {
            estimate: error,
            tolerance: cfg.tolerance,
        });
    }
    Ok((values, error))
}

fn integrate_body(
    dim: usize,
    keys: &[Vec<u64>],
    kmax: usize,
    u_tail: f64,
    panels_per_unit: f64,
    rule: &(Vec<f64>, Vec<f64>),
) -> Vec<f64> {
    let (nodes, weights) = rule;
    let mut sums = vec![0.0; keys.len()];
    let d = dim as f64;

    let accumulate = |u: f64, w: f64, sums: &mut [f64]| {
        let seq = scaled_bessel_i_seq(u / d, kmax);
        for (sum, key) in sums.iter_mut().zip(keys) {
            let f: f64 = key.iter().map(|&k| seq[k as usize]).product();
            *sum += w * f;
        }
    };

    // [0, 1] in u
    let panels = (2.0 * panels_per_unit).ceil() as usize;
    let h = 1.0 / panels as f64;
    for p in 0..panels {
        let mid = (p as f64 + 0.5) * h;
        for (x, w) in nodes.iter().zip(weights) {
            accumulate(mid + 0.5 * h * x, 0.5 * h * w, &mut sums);
        }
    }

    // [1, u_tail] in s = ln u, du = u ds
    let s_end = u_tail.ln();
    let panels = (s_end * panels_per_unit).ceil() as usize;
    let h = s_end / panels as f64;
    for p in 0..panels {
        let mid = (p as f64 + 0.5) * h;
        for (x, w) in nodes.iter().zip(weights) {
            let u = (mid + 0.5 * h * x).exp();
            accumulate(u, 0.5 * h * w * u, &mut sums);
        }
    }
    sums
}

/// `int_{z0 d}^inf prod_i e^{-u/d} I_{k_i}(u/d) du` from the product of Hankel
/// expansions, and a bound from the first omitted order.
fn asymptotic_tail(dim: usize, key: &[u64], z0: f64) -> (f64, f64) {
    let mut poly = vec![1.0];
    for &k in key {
        let c = asymptotic_coefficients(k as usize, TAIL_TERMS + 1);
        let mut next = vec![0.0; (poly.len() + c.len() - 1).min(TAIL_TERMS + 1)];
        for (i, &p) in poly.iter().enumerate() {
            for (j, &q) in c.iter().enumerate() {
                if i + j < next.len() {
                    next[i + j] += p * q;
                }
            }
        }
        poly = next;
    }
    let d = dim as f64;
    let half = d / 2.0;
    let prefactor = d * (2.0 * PI).powf(-half);
    let term = |n: usize| prefactor * poly[n] * z0.powf(1.0 - half - n as f64) / (half + n as f64 - 1.0);
    let value: f64 = (0..poly.len().min(TAIL_TERMS)).map(term).sum();
    let omitted = if poly.len() > TAIL_TERMS { term(TAIL_TERMS).abs() } else { 0.0 };
    (value, 2.0 * omitted + 4.0 * f64::EPSILON * value.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        let (x, w) = gauss_legendre(8);
        let total: f64 = w.iter().sum();
        assert!((total - 2.0).abs() < 1e-14);
        // int_{-1}^1 t^14 dt = 2/15, exact for 8 points
        let m: f64 = x.iter().zip(&w).map(|(t, w)| w * t.powi(14)).sum();
        assert!((m - 2.0 / 15.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_bad_settings() {
        let cfg = QuadConfig {
            order: 0,
            ..QuadConfig::default()
        };
        assert!(green_integrals(3, &[vec![0, 0, 0]], &cfg).is_err());
    }

    #[test]
    fn too_tight_tolerance_reports_accuracy() {
        let cfg = QuadConfig {
            order: 3,
            panels_per_unit: 0.3,
            tolerance: 1e-14,
        };
        let err = green_integrals(3, &[vec![0, 0, 0]], &cfg).unwrap_err();
        assert!(matches!(err, Error::Accuracy { .. }));
    }
}
