use serde::{Deserialize, Serialize};

use super::GLambdaOperator;
use crate::error::{invalid, Error, Result};

/// `F_t` on the operator's box at one time.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentField {
    pub time: f64,
    pub values: Vec<f64>,
    pub exterior: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentTrajectory {
    pub fields: Vec<MomentField>,
    /// Largest difference between the `dt` and `dt / 2` solutions.
    pub error_estimate: f64,
    pub dt: f64,
}

impl MomentTrajectory {
    /// `F_t(O)` at each output time.
    pub fn origin_series(&self, origin: usize) -> Vec<(f64, f64)> {
        self.fields.iter().map(|f| (f.time, f.values[origin])).collect()
    }
}

/// Values above this are treated as a blowup of the truncated system.
const BLOWUP: f64 = 1e12;

/// Integrates `dF/dt = G F` from `F_0 = 1` with classical RK4, reporting the
/// field at each of `times` (sorted, non-negative). The run is repeated with
/// half the step to estimate the integration error.
pub fn integrate_f(op: &GLambdaOperator, times: &[f64], dt: f64) -> Result<MomentTrajectory> {
    if !(dt > 0.0) {
        return Err(invalid("time step must be positive"));
    }
    if times.iter().any(|t| !(*t >= 0.0)) || times.windows(2).any(|w| w[1] < w[0]) {
        return Err(invalid("output times must be sorted and non-negative"));
    }
    if dt * op.max_row_norm() > 0.5 {
        return Err(invalid(format!(
            "step {dt} is too large for row norm {}; need dt * norm <= 0.5",
            op.max_row_norm()
        )));
    }
    let coarse = run(op, times, dt)?;
    let fine = run(op, times, dt / 2.0)?;
    let error_estimate = coarse
        .iter()
        .zip(&fine)
        .flat_map(|(c, f)| c.values.iter().zip(&f.values).map(|(x, y)| (x - y).abs()))
        .fold(0.0, f64::max);
    Ok(MomentTrajectory {
        fields: fine,
        error_estimate,
        dt,
    })
}

fn run(op: &GLambdaOperator, times: &[f64], dt: f64) -> Result<Vec<MomentField>> {
    let n = op.displacement_box().len();
    let mut f = vec![1.0; n];
    let mut k1 = vec![0.0; n];
    let mut k2 = vec![0.0; n];
    let mut k3 = vec![0.0; n];
    let mut k4 = vec![0.0; n];
    let mut tmp = vec![0.0; n];
    let mut now = 0.0;
    let mut out = Vec::with_capacity(times.len());
    for &target in times {
        let span = target - now;
        let steps = (span / dt - 1e-9).ceil().max(0.0) as usize;
        if steps > 0 {
            let h = span / steps as f64;
            for _ in 0..steps {
                op.apply(&f, &mut k1);
                for i in 0..n {
                    tmp[i] = f[i] + 0.5 * h * k1[i];
                }
                op.apply(&tmp, &mut k2);
                for i in 0..n {
                    tmp[i] = f[i] + 0.5 * h * k2[i];
                }
                op.apply(&tmp, &mut k3);
                for i in 0..n {
                    tmp[i] = f[i] + h * k3[i];
                }
                op.apply(&tmp, &mut k4);
                for i in 0..n {
                    f[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
                }
            }
            if let Some(bad) = f.iter().find(|v| !(v.is_finite() && **v > 0.0 && **v < BLOWUP)) {
                return Err(Error::NumericRange(format!(
                    "pair correlation left (0, {BLOWUP:e}) with value {bad} before t = {target}"
                )));
            }
        }
        now = target;
        out.push(MomentField {
            time: target,
            values: f.clone(),
            exterior: op.exterior(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::{build_g, MomentParams};
    use super::*;

    #[test]
    fn initial_field_is_one() {
        let op = build_g(&MomentParams::new(3, 0.36, 0.75, 0.75).unwrap(), 3).unwrap();
        let tr = integrate_f(&op, &[0.0], 0.01).unwrap();
        assert!(tr.fields[0].values.iter().all(|&v| v == 1.0));
    }

    #[test]
    fn symmetry_is_preserved() {
        let op = build_g(&MomentParams::new(3, 0.36, 0.7, 0.8).unwrap(), 4).unwrap();
        let bx = op.displacement_box().clone();
        let tr = integrate_f(&op, &[0.5, 1.0, 2.0], 0.01).unwrap();
        for field in &tr.fields {
            for i in 0..bx.len() {
                assert!((field.values[i] - field.values[bx.negated(i)]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn rejects_unstable_step() {
        let op = build_g(&MomentParams::new(3, 0.36, 0.75, 0.75).unwrap(), 3).unwrap();
        assert!(integrate_f(&op, &[1.0], 1.0).is_err());
        assert!(integrate_f(&op, &[1.0, 0.5], 0.01).is_err());
    }

    #[test]
    fn supercritical_growth_is_flagged() {
        // far below the threshold the origin correlation grows exponentially
        let op = build_g(&MomentParams::new(3, 0.05, 1.0, 1.0).unwrap(), 2).unwrap();
        let err = integrate_f(&op, &[40.0], 0.05).unwrap_err();
        assert!(matches!(err, Error::NumericRange(_)));
    }
}
