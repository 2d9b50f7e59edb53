use rand::Rng;

use super::{Bias, GammaEstimate, GammaMethod};
use crate::error::{invalid, Result};
use crate::rng::{map_replicas, replica_stream};

/// Fraction of walks that avoid the origin during steps `1..=max_steps`.
///
/// Truncation can only turn an eventual return into a non-return, so the
/// estimate is biased upward: its expectation is `P(no return by max_steps) >= gamma`.
pub fn gamma_mc(dim: usize, max_steps: u64, replicas: u64, seed: u64) -> Result<GammaEstimate> {
    if dim == 0 {
        return Err(invalid("dimension must be at least 1"));
    }
    if max_steps < 2 || !max_steps.is_multiple_of(2) {
        return Err(invalid(format!("max_steps must be even and >= 2, got {max_steps}")));
    }
    if replicas == 0 {
        return Err(invalid("replicas must be at least 1"));
    }
    let escaped = map_replicas(replicas as usize, |r| {
        let mut rng = replica_stream(seed, r);
        escapes(dim, max_steps, &mut rng)
    });
    let hits = escaped.iter().filter(|&&e| e).count() as f64;
    let n = replicas as f64;
    let p = hits / n;
    let error = if replicas > 1 {
        (p * (1.0 - p) / (n - 1.0)).sqrt()
    } else {
        0.0
    };
    Ok(GammaEstimate {
        d: dim,
        value: p,
        error,
        method: GammaMethod::Mc,
        bias: Bias::Upward,
    })
}

fn escapes<R: Rng>(dim: usize, max_steps: u64, rng: &mut R) -> bool {
    let mut pos = vec![0i64; dim];
    let mut nonzero = 0usize;
    let directions = 2 * dim as u32;
    for _ in 0..max_steps {
        let dir = rng.random_range(0..directions);
        let axis = (dir / 2) as usize;
        let before = pos[axis];
        pos[axis] += if dir.is_multiple_of(2) { 1 } else { -1 };
        match (before == 0, pos[axis] == 0) {
            (true, false) => nonzero += 1,
            (false, true) => nonzero -= 1,
            _ => {}
        }
        if nonzero == 0 {
            return false;
        }
    }
    true
}
