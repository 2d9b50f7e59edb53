//! Critical-value bounds as functions of the return probability `gamma`.
//!
//! For weights `a, b > 0` let
//! `L(a, b) = 2(a + b - 1) - (a^2 + b^2 - 1) - 2ab(1 - gamma)`.
//! Whenever `L(a, b) > 0`, `lambda_c <= 1 / (2d L(a, b))`. `a = b = 1` recovers
//! `alpha_2`, and the maximiser `a = b = 1 / (2 - gamma)` gives
//! `beta = (2 - gamma) / (2 d gamma)`.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::random_walk;

fn check_weights(a: f64, b: f64) -> Result<()> {
    if !(a > 0.0 && a.is_finite() && b > 0.0 && b.is_finite()) {
        return Err(invalid(format!("weights must be positive and finite, got a = {a}, b = {b}")));
    }
    Ok(())
}

fn check_gamma(gamma: f64) -> Result<()> {
    if !(gamma > 0.5 && gamma < 1.0) {
        return Err(invalid(format!("gamma must lie in (1/2, 1), got {gamma}")));
    }
    Ok(())
}

/// `L(a, b)`; may be non-positive.
pub fn l_value(a: f64, b: f64, gamma: f64) -> Result<f64> {
    check_weights(a, b)?;
    Ok(l_unchecked(a, b, gamma))
}

#[inline]
fn l_unchecked(a: f64, b: f64, gamma: f64) -> f64 {
    2.0 * (a + b - 1.0) - (a * a + b * b - 1.0) - 2.0 * a * b * (1.0 - gamma)
}

/// `1 / (2d L(a, b))`, the upper bound on `lambda_c` for weights `(a, b)`.
pub fn general_upper_bound(dim: usize, a: f64, b: f64, gamma: f64) -> Result<f64> {
    let l = l_value(a, b, gamma)?;
    if !(l > 0.0) {
        return Err(Error::ConditionViolated { l_value: l });
    }
    Ok(1.0 / (2.0 * dim as f64 * l))
}

/// Result of the derivative-free search for the maximiser of `L`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NumericOptimum {
    pub a: f64,
    pub b: f64,
    pub value: f64,
}

/// Grid search over `(0, 2]^2` followed by a shrinking compass search.
/// Uses nothing about `L` beyond point evaluations.
pub fn maximize_l_numeric(gamma: f64) -> Result<NumericOptimum> {
    check_gamma(gamma)?;
    let f = |a: f64, b: f64| l_unchecked(a, b, gamma);
    let n = 200;
    let h0 = 2.0 / n as f64;
    let (mut a, mut b) = (h0, h0);
    let mut best = f(a, b);
    for i in 1..=n {
        for j in 1..=n {
            let (x, y) = (i as f64 * h0, j as f64 * h0);
            let v = f(x, y);
            if v > best {
                best = v;
                a = x;
                b = y;
            }
        }
    }
    let mut step = h0;
    while step > 1e-12 {
        let mut moved = false;
        for (da, db) in [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0), (1.0, 1.0), (-1.0, -1.0), (1.0, -1.0), (-1.0, 1.0)] {
            let (x, y) = (a + da * step, b + db * step);
            if x <= 0.0 || y <= 0.0 {
                continue;
            }
            let v = f(x, y);
            if v > best {
                best = v;
                a = x;
                b = y;
                moved = true;
            }
        }
        if !moved {
            step *= 0.5;
        }
    }
    Ok(NumericOptimum { a, b, value: best })
}

/// The maximiser `a = b = 1 / (2 - gamma)`, confirmed against the numeric search.
pub fn optimal_ab(gamma: f64) -> Result<(f64, f64)> {
    check_gamma(gamma)?;
    let w = 1.0 / (2.0 - gamma);
    let numeric = maximize_l_numeric(gamma)?;
    let gap = (numeric.a - w).abs().max((numeric.b - w).abs());
    if gap > 1e-6 {
        return Err(Error::NumericRange(format!(
            "numeric maximiser ({}, {}) is {gap:e} away from the closed form {w}",
            numeric.a, numeric.b
        )));
    }
    Ok((w, w))
}

/// `1/gamma - 1`.
pub fn alpha1(gamma: f64) -> f64 {
    1.0 / gamma - 1.0
}

/// `1 / (2d (2 gamma - 1))`.
pub fn alpha2(dim: usize, gamma: f64) -> f64 {
    1.0 / (2.0 * dim as f64 * (2.0 * gamma - 1.0))
}

/// `(2 - gamma) / (2 d gamma)`.
pub fn beta(dim: usize, gamma: f64) -> f64 {
    (2.0 - gamma) / (2.0 * dim as f64 * gamma)
}

/// `1 / (2d - 1)`.
pub fn lower_bound(dim: usize) -> f64 {
    1.0 / (2.0 * dim as f64 - 1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundSet {
    pub d: usize,
    pub gamma: f64,
    pub alpha1: f64,
    pub alpha2: f64,
    pub beta: f64,
    pub lower: f64,
    pub optimal_a: f64,
    pub optimal_b: f64,
}

impl BoundSet {
    pub fn from_gamma(dim: usize, gamma: f64) -> Result<Self> {
        check_gamma(gamma)?;
        let (a, b) = optimal_ab(gamma)?;
        Ok(Self {
            d: dim,
            gamma,
            alpha1: alpha1(gamma),
            alpha2: alpha2(dim, gamma),
            beta: beta(dim, gamma),
            lower: lower_bound(dim),
            optimal_a: a,
            optimal_b: b,
        })
    }

    /// `lower < beta < min(alpha1, alpha2)`.
    pub fn ordering_holds(&self) -> bool {
        self.lower < self.beta && self.beta < self.alpha1.min(self.alpha2)
    }
}

/// Bounds for every `d` in `d_min..=d_max`, with `gamma_d` from quadrature.
pub fn bound_table(d_min: usize, d_max: usize) -> Result<Vec<BoundSet>> {
    if d_min < 3 {
        return Err(Error::Transience { d: d_min });
    }
    if d_min > d_max {
        return Err(invalid(format!("empty dimension range {d_min}..={d_max}")));
    }
    (d_min..=d_max)
        .map(|d| {
            let g = random_walk::gamma(d)?;
            let set = BoundSet::from_gamma(d, g.value)?;
            if !set.ordering_holds() {
                return Err(Error::NumericRange(format!("bound ordering fails at d = {d}: {set:?}")));
            }
            Ok(set)
        })
        .collect()
}
