use serde::{Deserialize, Serialize};

use super::{GLambdaOperator, MomentParams};
use crate::bounds;
use crate::error::{invalid, Error, Result};
use crate::lattice::DisplacementBox;
use crate::random_walk::GreenTable;

/// `K = H + c` on a displacement box, with
/// `c = (2 d lambda L(a, b) - 1) / (1 + 2 d lambda (a + b - 1)^2)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KVector {
    pub params: MomentParams,
    pub radius: usize,
    /// Return probability implied by the table, `1 - H(e_1)`.
    pub gamma: f64,
    pub l_value: f64,
    /// `1 / (2 d L(a, b))`; `c > 0` exactly when `lambda` exceeds it.
    pub threshold: f64,
    pub c: f64,
    /// Infimum over the whole lattice, which is `c` since `H(x) -> 0`.
    pub inf_k: f64,
    /// `K(O) = 1 + c`.
    pub k_origin: f64,
    /// Smallest value inside the box (at its corners).
    pub box_min: f64,
    pub values: Vec<f64>,
}

impl KVector {
    /// `K(O) / inf K`, the ceiling on `F_t(O)`.
    pub fn ceiling(&self) -> f64 {
        self.k_origin / self.inf_k
    }

    /// `inf K / K(O)`, the floor on the survival probability.
    pub fn floor(&self) -> f64 {
        self.inf_k / self.k_origin
    }
}

/// `c` as a function of the model parameters and `L(a, b)`.
pub fn c_value(params: &MomentParams, l_value: f64) -> f64 {
    let d = params.d as f64;
    let s = params.a + params.b - 1.0;
    (2.0 * d * params.lambda * l_value - 1.0) / (1.0 + 2.0 * d * params.lambda * s * s)
}

pub fn build_k(params: &MomentParams, table: &GreenTable, radius: usize) -> Result<KVector> {
    params.validate()?;
    if table.dim() != params.d {
        return Err(invalid(format!(
            "hitting table is for d = {}, parameters have d = {}",
            table.dim(),
            params.d
        )));
    }
    if table.displacement_box().radius() < radius {
        return Err(invalid(format!(
            "hitting table radius {} is smaller than the requested radius {radius}",
            table.displacement_box().radius()
        )));
    }
    let bx = DisplacementBox::new(params.d, radius)?;
    let mut unit = vec![0; params.d];
    unit[0] = 1;
    let gamma = 1.0 - table.hitting(&unit).expect("unit displacement lies in the table");
    let l = bounds::l_value(params.a, params.b, gamma)?;
    if !(l > 0.0) {
        return Err(Error::ConditionViolated { l_value: l });
    }
    let threshold = 1.0 / (2.0 * params.d as f64 * l);
    let c = c_value(params, l);
    if !(params.lambda > threshold && c > 0.0) {
        return Err(Error::HypothesisViolated {
            lambda: params.lambda,
            threshold,
        });
    }
    let values: Vec<f64> = (0..bx.len())
        .map(|i| table.hitting(&bx.displacement(i)).expect("box lies inside the table") + c)
        .collect();
    let box_min = values.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(KVector {
        params: *params,
        radius,
        gamma,
        l_value: l,
        threshold,
        c,
        inf_k: c,
        k_origin: values[bx.origin()],
        box_min,
        values,
    })
}

fn check_match(op: &GLambdaOperator, k: &KVector) -> Result<()> {
    if op.params() != &k.params || op.displacement_box().radius() != k.radius {
        return Err(invalid("operator and K vector were built with different parameters"));
    }
    Ok(())
}

/// `(G K)(x)` at every box site whose neighbors all lie in the box; boundary
/// sites read 0.
pub fn residual_field(op: &GLambdaOperator, k: &KVector) -> Result<Vec<f64>> {
    check_match(op, k)?;
    let bx = op.displacement_box();
    Ok((0..bx.len())
        .map(|i| if bx.is_boundary(i) { 0.0 } else { op.apply_at(&k.values, i) })
        .collect())
}

/// `max |(G K)(x)|` over the interior of the box.
pub fn residual_gk(op: &GLambdaOperator, k: &KVector) -> Result<f64> {
    Ok(residual_field(op, k)?.into_iter().map(f64::abs).fold(0.0, f64::max))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SurvivalBound {
    /// `inf K / K(O) = c / (1 + c)`.
    pub floor: f64,
    /// `K(O) / inf K = (1 + c) / c`.
    pub ceiling: f64,
    pub c: f64,
    pub threshold: f64,
}

pub fn survival_lower_bound(params: &MomentParams, table: &GreenTable, radius: usize) -> Result<SurvivalBound> {
    let k = build_k(params, table, radius)?;
    Ok(SurvivalBound {
        floor: k.floor(),
        ceiling: k.ceiling(),
        c: k.c,
        threshold: k.threshold,
    })
}
