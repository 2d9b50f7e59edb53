use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::engine::{check_times, Engine, EventChannels};
use super::ModelParams;
use crate::error::{invalid, Result};
use crate::lattice::DisplacementBox;
use crate::rng::{map_replicas, replica_stream};
use crate::stats::{Estimate, MeanAccumulator};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SurvivalEstimate {
    pub time: f64,
    /// Estimate of `P(eta_t(O) = 1)`.
    pub value: f64,
    pub std_error: f64,
    pub replicas: usize,
    pub side: usize,
}

impl SurvivalEstimate {
    pub fn estimate(&self) -> Estimate {
        Estimate {
            value: self.value,
            std_error: self.std_error,
        }
    }
}

/// `P(eta_t(O) = 1)` from the all-occupied start. Each replica contributes
/// the occupied fraction of the torus, which has the same mean by
/// translation invariance.
pub fn estimate_survival(params: &ModelParams, t: f64, replicas: usize, seed: u64) -> Result<SurvivalEstimate> {
    Ok(estimate_survival_curve(params, &[t], replicas, seed)?[0])
}

/// Survival estimates at several times from the same replicas.
pub fn estimate_survival_curve(
    params: &ModelParams,
    times: &[f64],
    replicas: usize,
    seed: u64,
) -> Result<Vec<SurvivalEstimate>> {
    check_times(times)?;
    if replicas == 0 {
        return Err(invalid("at least one replica is required"));
    }
    let lattice = Arc::new(params.lattice()?);
    let n = lattice.num_sites() as f64;
    let per_replica: Vec<Result<Vec<f64>>> = map_replicas(replicas, |r| {
        let mut engine = Engine::new(Arc::clone(&lattice), params, replica_stream(seed, r), EventChannels::default())?;
        let mut out = Vec::with_capacity(times.len());
        for &t in times {
            engine.advance_to(t)?;
            out.push(engine.occupied().iter().filter(|&&o| o).count() as f64 / n);
        }
        Ok(out)
    });
    let mut acc = vec![MeanAccumulator::new(); times.len()];
    for row in per_replica {
        for (a, v) in acc.iter_mut().zip(row?) {
            a.push(v);
        }
    }
    Ok(times
        .iter()
        .zip(&acc)
        .map(|(&time, a)| SurvivalEstimate {
            time,
            value: a.mean(),
            std_error: a.std_error(),
            replicas,
            side: params.side,
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DisplacementEstimate {
    pub displacement: Vec<i64>,
    pub value: f64,
    pub std_error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentEstimate {
    pub time: f64,
    /// Estimate of `E xi_t(x)`.
    pub mean: Estimate,
    /// Estimates of `E[xi_t(O) xi_t(x)]` in box index order.
    pub second: Vec<DisplacementEstimate>,
    pub radius: usize,
    pub replicas: usize,
    pub side: usize,
}

impl MomentEstimate {
    pub fn second_at(&self, x: &[i64]) -> Option<&DisplacementEstimate> {
        self.second.iter().find(|e| e.displacement == x)
    }
}

/// First and second moments of `xi_t` from the all-ones start. Each replica
/// contributes its torus average of `xi(u)` and of `xi(u) xi(u + x)`.
pub fn estimate_moments(
    params: &ModelParams,
    times: &[f64],
    radius: usize,
    replicas: usize,
    seed: u64,
) -> Result<Vec<MomentEstimate>> {
    check_times(times)?;
    if replicas < 2 {
        return Err(invalid("at least two replicas are needed for standard errors"));
    }
    let lattice = Arc::new(params.lattice()?);
    if radius + 1 > params.side / 2 {
        return Err(invalid(format!(
            "box radius {radius} needs a torus side of at least {}, got {}",
            2 * (radius + 1),
            params.side
        )));
    }
    let bx = DisplacementBox::new(params.d, radius)?;
    let sites = lattice.num_sites();
    // x and -x give the same torus sum, so only the first half (plus O) is computed
    let half = bx.len() / 2 + 1;
    let shifts: Vec<Vec<u32>> = (0..half)
        .map(|k| {
            let x = bx.displacement(k);
            (0..sites).map(|u| lattice.translate(u, &x) as u32).collect()
        })
        .collect();

    let per_replica: Vec<Result<Vec<f64>>> = map_replicas(replicas, |r| {
        let mut engine = Engine::new(Arc::clone(&lattice), params, replica_stream(seed, r), EventChannels::default())?;
        let mut out = Vec::with_capacity(times.len() * (1 + half));
        for &t in times {
            engine.advance_to(t)?;
            let xi = engine.field_values();
            out.push(xi.iter().sum::<f64>() / sites as f64);
            for shift in &shifts {
                let s: f64 = xi.iter().zip(shift).map(|(v, &j)| v * xi[j as usize]).sum();
                out.push(s / sites as f64);
            }
        }
        Ok(out)
    });

    let stride = 1 + half;
    let mut acc = vec![MeanAccumulator::new(); times.len() * stride];
    for row in per_replica {
        for (a, v) in acc.iter_mut().zip(row?) {
            a.push(v);
        }
    }
    Ok(times
        .iter()
        .enumerate()
        .map(|(ti, &time)| {
            let block = &acc[ti * stride..(ti + 1) * stride];
            let second = (0..bx.len())
                .map(|k| {
                    let a = &block[1 + k.min(bx.negated(k))];
                    DisplacementEstimate {
                        displacement: bx.displacement(k),
                        value: a.mean(),
                        std_error: a.std_error(),
                    }
                })
                .collect();
            MomentEstimate {
                time,
                mean: block[0].estimate(),
                second,
                radius,
                replicas,
                side: params.side,
            }
        })
        .collect())
}
