//! Independent oracles shared by the integration and acceptance tests.
//!
//! Nothing here calls into the Bessel quadrature or the event-stream engine.

#![allow(dead_code)]

pub mod contact_reference;

use std::f64::consts::PI;

fn log_factorials(n: usize) -> Vec<f64> {
    let mut lf = vec![0.0; n + 1];
    for k in 1..=n {
        lf[k] = lf[k - 1] + (k as f64).ln();
    }
    lf
}

fn log_sum_exp(terms: impl Iterator<Item = f64> + Clone) -> f64 {
    let m = terms.clone().fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return m;
    }
    m + terms.map(|t| (t - m).exp()).sum::<f64>().ln()
}

/// `u_n = P(S_n = O)` for `n = 0..=max_steps`, exactly up to rounding.
///
/// Counting paths by the number of steps per axis,
/// `P(S_{2n} = O) = (2n)! / (2d)^{2n} [x^n] (sum_m x^m / (m!)^2)^d`;
/// the `d`-fold power is taken by repeated convolution in log space.
pub fn return_probabilities(dim: usize, max_steps: usize) -> Vec<f64> {
    let half = max_steps / 2;
    let lf = log_factorials(max_steps + 1);
    let base: Vec<f64> = (0..=half).map(|m| -2.0 * lf[m]).collect();
    let mut acc = base.clone();
    for _ in 1..dim {
        acc = (0..=half)
            .map(|n| log_sum_exp((0..=n).map(|k| acc[k] + base[n - k])))
            .collect();
    }
    let ln2d = ((2 * dim) as f64).ln();
    let mut u = vec![0.0; max_steps + 1];
    for n in 0..=half {
        u[2 * n] = (lf[2 * n] - 2.0 * n as f64 * ln2d + acc[n]).exp();
    }
    u
}

/// `G(0) = sum_n P(S_n = O)`: exact partial sum through `max_steps` plus a
/// tail from the local limit `P(S_{2n} = O) ~ 2 (d / (4 pi n))^{d/2} (1 + c1/n + c2/n^2)`
/// with `c1, c2` fitted to the last exact terms. Returns `(total, tail)`.
pub fn green_origin_dp(dim: usize, max_steps: usize) -> (f64, f64) {
    let u = return_probabilities(dim, max_steps);
    let partial: f64 = u.iter().sum();
    let m = max_steps / 2;
    let d = dim as f64;
    let lead = |n: f64| 2.0 * (d / (4.0 * PI * n)).powf(d / 2.0);
    let resid = |n: usize| u[2 * n] / lead(n as f64) - 1.0;
    // r(n) = c1/n + c2/n^2 at n = m and n = m/2
    let (n1, n2) = (m as f64, (m / 2) as f64);
    let (r1, r2) = (resid(m), resid(m / 2));
    let c2 = (r1 * n1 - r2 * n2) / (1.0 / n1 - 1.0 / n2);
    let c1 = r1 * n1 - c2 / n1;
    // sum_{n > m} n^{-s} by Euler-Maclaurin
    let zeta_tail = |s: f64| {
        n1.powf(1.0 - s) / (s - 1.0) - 0.5 * n1.powf(-s) + s * n1.powf(-s - 1.0) / 12.0
            - s * (s + 1.0) * (s + 2.0) * n1.powf(-s - 3.0) / 720.0
    };
    let s = d / 2.0;
    let tail = 2.0 * (d / (4.0 * PI)).powf(s) * (zeta_tail(s) + c1 * zeta_tail(s + 1.0) + c2 * zeta_tail(s + 2.0));
    (partial + tail, tail)
}

/// `P(no return to O during steps 1..=n)` from the renewal equation
/// `u_n = sum_{k=1}^n f_k u_{n-k}`.
pub fn no_return_within(dim: usize, n: usize) -> f64 {
    let u = return_probabilities(dim, n);
    let mut f = vec![0.0; n + 1];
    for k in 1..=n {
        let conv: f64 = (1..k).map(|j| f[j] * u[k - j]).sum();
        f[k] = u[k] - conv;
    }
    1.0 - f.iter().sum::<f64>()
}

/// `gamma_d` from the DP sum with a dimension-dependent step budget.
pub fn gamma_dp(dim: usize) -> f64 {
    let steps = if dim == 3 { 10_000 } else { 2_000 };
    1.0 / green_origin_dp(dim, steps).0
}
