//! Exponentially scaled modified Bessel functions of integer order,
//! `e^{-z} I_k(z)` for `z >= 0`.
//!
//! Small and moderate arguments use Miller's backward recurrence normalised by
//! `I_0(z) + 2 sum_{k>=1} I_k(z) = e^z`, which produces the scaled values
//! directly without ever forming `e^z`. Large arguments use the Hankel
//! asymptotic series.

use std::f64::consts::PI;

const RESCALE_ABOVE: f64 = 1e250;
const ASYMPTOTIC_MIN_Z: f64 = 2000.0;

/// Smallest argument at which the asymptotic series is used for orders up to `kmax`.
pub fn asymptotic_threshold(kmax: usize) -> f64 {
    ASYMPTOTIC_MIN_Z.max(20.0 * (kmax * kmax) as f64)
}

/// `e^{-z} I_k(z)` for `k = 0..=kmax`.
pub fn scaled_bessel_i_seq(z: f64, kmax: usize) -> Vec<f64> {
    debug_assert!(z >= 0.0 && z.is_finite());
    let mut out = vec![0.0; kmax + 1];
    if z == 0.0 {
        out[0] = 1.0;
        return out;
    }
    if z >= asymptotic_threshold(kmax) {
        for (k, slot) in out.iter_mut().enumerate() {
            *slot = asymptotic_scaled(z, k);
        }
        return out;
    }
    miller(z, &mut out);
    out
}

fn miller(z: f64, out: &mut [f64]) {
    let kmax = out.len() - 1;
    let start = kmax + 32 + (12.0 * z.sqrt()).ceil() as usize;
    let mut above = 0.0_f64;
    let mut current = 1e-300_f64;
    // sum of I_0 + 2 sum I_k over everything seen so far, in the same scale
    let mut norm = 0.0_f64;
    for k in (1..=start).rev() {
        if k <= kmax {
            out[k] = current;
        }
        norm += 2.0 * current;
        let below = (2.0 * k as f64 / z) * current + above;
        above = current;
        current = below;
        if current > RESCALE_ABOVE {
            let f = 1.0 / RESCALE_ABOVE;
            current *= f;
            above *= f;
            norm *= f;
            if k <= kmax {
                for v in out[k..].iter_mut() {
                    *v *= f;
                }
            }
        }
    }
    out[0] = current;
    norm += current;
    for v in out.iter_mut() {
        *v /= norm;
    }
}

/// Coefficients `c_j` with `e^{-z} I_k(z) ~ (2 pi z)^{-1/2} sum_j c_j z^{-j}`.
pub fn asymptotic_coefficients(k: usize, terms: usize) -> Vec<f64> {
    let mu = 4.0 * (k * k) as f64;
    let mut coeffs = Vec::with_capacity(terms);
    let mut c = 1.0;
    coeffs.push(c);
    for j in 1..terms {
        let odd = (2 * j - 1) as f64;
        c *= -(mu - odd * odd) / (8.0 * j as f64);
        coeffs.push(c);
    }
    coeffs
}

fn asymptotic_scaled(z: f64, k: usize) -> f64 {
    let mu = 4.0 * (k * k) as f64;
    let mut term = 1.0;
    let mut sum = 1.0;
    for j in 1..40 {
        let odd = (2 * j - 1) as f64;
        let next = -term * (mu - odd * odd) / (8.0 * j as f64 * z);
        if next.abs() > term.abs() {
            break;
        }
        term = next;
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum / (2.0 * PI * z).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Power series `e^{-z} sum_m (z/2)^{2m+k} / (m! (m+k)!)`, fine for small z.
    fn series(z: f64, k: usize) -> f64 {
        let mut term = (0..k).fold(1.0, |acc, j| acc * (z / 2.0) / (j + 1) as f64);
        let mut sum = term;
        for m in 1..400 {
            term *= (z / 2.0) * (z / 2.0) / (m as f64 * (m + k) as f64);
            sum += term;
            if term < 1e-18 * sum {
                break;
            }
        }
        sum * (-z).exp()
    }

    #[test]
    fn matches_power_series() {
        for &z in &[1e-6, 0.01, 0.5, 1.0, 3.3, 10.0, 40.0, 120.0] {
            let seq = scaled_bessel_i_seq(z, 12);
            for (k, &v) in seq.iter().enumerate() {
                let want = series(z, k);
                if want > 1e-280 {
                    assert!(
                        (v - want).abs() <= 1e-13 * want,
                        "z={z} k={k}: {v} vs {want}"
                    );
                }
            }
        }
    }

    #[test]
    fn known_values() {
        // I_0(1) = 1.2660658777520082, I_1(1) = 0.5651591039924850
        let seq = scaled_bessel_i_seq(1.0, 1);
        assert!((seq[0] * 1f64.exp() - 1.2660658777520082).abs() < 1e-14);
        assert!((seq[1] * 1f64.exp() - 0.565159103992485).abs() < 1e-14);
    }

    #[test]
    fn miller_and_asymptotic_agree_at_switch() {
        let kmax = 6;
        let z = asymptotic_threshold(kmax);
        let mut below = vec![0.0; kmax + 1];
        miller(z, &mut below);
        let above = scaled_bessel_i_seq(z, kmax);
        for k in 0..=kmax {
            assert!((below[k] - above[k]).abs() < 1e-12 * above[k], "k={k}");
        }
    }

    #[test]
    fn normalization_identity() {
        for &z in &[0.3, 7.0, 150.0] {
            let seq = scaled_bessel_i_seq(z, 400);
            let total: f64 = seq[0] + 2.0 * seq[1..].iter().sum::<f64>();
            assert!((total - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn zero_argument() {
        assert_eq!(scaled_bessel_i_seq(0.0, 3), vec![1.0, 0.0, 0.0, 0.0]);
    }
}
