//! Hitting function from the discrete Dirichlet problem on a finite box.
//!
//! `H(O) = 1`, `H = 0` on the faces `max_i |x_i| = R`, and every other site is
//! the average of its `2d` neighbors. The box solution is the probability of
//! reaching `O` before the faces, so it underestimates the lattice `H`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{Bias, GammaEstimate, GammaMethod};
use crate::error::{invalid, Error, Result};
use crate::lattice::DisplacementBox;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HittingSolution {
    pub d: usize,
    pub radius: usize,
    /// `H` in box index order.
    pub hitting: Vec<f64>,
    pub iterations: usize,
    /// Upper bound on `H(x) - H_box(x)`: the largest lattice `H` on the faces.
    pub bias_bound: f64,
}

/// Leading-order lattice Green function `G(x) ~ (d/2) Gamma(d/2 - 1) pi^{-d/2} |x|^{2-d}`.
pub(crate) fn green_asymptote(dim: usize, r: f64) -> f64 {
    let d = dim as f64;
    0.5 * d * gamma_fn(d / 2.0 - 1.0) * PI.powf(-d / 2.0) * r.powf(2.0 - d)
}

fn gamma_fn(x: f64) -> f64 {
    // half-integer and integer arguments only
    if (x - x.round()).abs() < 1e-12 {
        (1..x.round() as u64).map(|k| k as f64).product()
    } else {
        let mut v = PI.sqrt();
        let mut a = 0.5;
        while a < x - 1e-12 {
            v *= a;
            a += 1.0;
        }
        v
    }
}

pub fn hitting_solver(dim: usize, radius: usize, tolerance: f64) -> Result<HittingSolution> {
    if dim < 3 {
        return Err(Error::Transience { d: dim });
    }
    if radius < 2 {
        return Err(invalid("solver radius must be at least 2"));
    }
    let bx = DisplacementBox::new(dim, radius)?;
    let origin = bx.origin();
    let mut h = vec![0.0; bx.len()];
    h[origin] = 1.0;
    let free: Vec<usize> = (0..bx.len())
        .filter(|&i| i != origin && !bx.is_boundary(i))
        .collect();
    let omega = 2.0 / (1.0 + (PI / (2 * radius) as f64).sin());
    let inv = 1.0 / (2 * dim) as f64;
    let mut iterations = 0;
    loop {
        iterations += 1;
        let mut delta = 0.0_f64;
        for &i in &free {
            let avg: f64 = (0..2 * dim)
                .map(|slot| h[bx.neighbor(i, slot).expect("free site has all neighbors")])
                .sum::<f64>()
                * inv;
            let change = omega * (avg - h[i]);
            h[i] += change;
            delta = delta.max(change.abs());
        }
        if delta < tolerance {
            break;
        }
        if iterations > 100_000 {
            return Err(Error::Accuracy {
                estimate: delta,
                tolerance,
            });
        }
    }
    let r = radius as f64;
    let bias_bound = green_asymptote(dim, r) * (1.0 + 1.0 / r);
    Ok(HittingSolution {
        d: dim,
        radius,
        hitting: h,
        iterations,
        bias_bound,
    })
}

/// `gamma = 1 - H(e_1)` from the box solution; biased upward by at most `bias_bound`.
pub fn gamma_solver(dim: usize, radius: usize) -> Result<GammaEstimate> {
    let sol = hitting_solver(dim, radius, 1e-12)?;
    let bx = DisplacementBox::new(dim, radius)?;
    let h_e1 = sol.hitting[bx.unit(0, true)];
    Ok(GammaEstimate {
        d: dim,
        value: 1.0 - h_e1,
        error: sol.bias_bound,
        method: GammaMethod::Solver,
        bias: Bias::Upward,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_function_values() {
        assert!((gamma_fn(0.5) - PI.sqrt()).abs() < 1e-15);
        assert!((gamma_fn(1.5) - 0.5 * PI.sqrt()).abs() < 1e-15);
        assert_eq!(gamma_fn(3.0), 2.0);
        assert_eq!(gamma_fn(1.0), 1.0);
    }

    #[test]
    fn three_dimensional_asymptote() {
        // 3 / (2 pi r)
        assert!((green_asymptote(3, 2.0) - 3.0 / (4.0 * PI)).abs() < 1e-15);
    }

    #[test]
    fn box_solution_is_harmonic_and_bounded() {
        let sol = hitting_solver(3, 6, 1e-13).unwrap();
        let bx = DisplacementBox::new(3, 6).unwrap();
        for i in 0..bx.len() {
            assert!((0.0..=1.0).contains(&sol.hitting[i]));
            if i != bx.origin() && !bx.is_boundary(i) {
                let avg: f64 = (0..6).map(|s| sol.hitting[bx.neighbor(i, s).unwrap()]).sum::<f64>() / 6.0;
                assert!((avg - sol.hitting[i]).abs() < 1e-11);
            }
        }
    }

    #[test]
    fn rejects_recurrent_dimensions() {
        assert_eq!(hitting_solver(2, 5, 1e-10).unwrap_err(), Error::Transience { d: 2 });
    }
}
