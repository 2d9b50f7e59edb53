use super::{GEntries, MomentParams};
use crate::error::{invalid, Result};
use crate::lattice::DisplacementBox;

/// `G_lambda` restricted to a displacement box. Neighbors outside the box
/// read a fixed exterior value.
#[derive(Debug, Clone)]
pub struct GLambdaOperator {
    params: MomentParams,
    bx: DisplacementBox,
    entries: GEntries<f64>,
    exterior: f64,
}

/// Operator on the box of radius `radius` with exterior clamp 1.
pub fn build_g(params: &MomentParams, radius: usize) -> Result<GLambdaOperator> {
    params.validate()?;
    if radius < 2 {
        return Err(invalid(format!("operator box radius must be at least 2, got {radius}")));
    }
    let bx = DisplacementBox::new(params.d, radius)?;
    Ok(GLambdaOperator {
        params: *params,
        bx,
        entries: GEntries::new(params.d, params.lambda, params.a, params.b),
        exterior: 1.0,
    })
}

impl GLambdaOperator {
    pub fn params(&self) -> &MomentParams {
        &self.params
    }

    pub fn displacement_box(&self) -> &DisplacementBox {
        &self.bx
    }

    pub fn entries(&self) -> &GEntries<f64> {
        &self.entries
    }

    pub fn exterior(&self) -> f64 {
        self.exterior
    }

    pub fn with_exterior(mut self, exterior: f64) -> Self {
        self.exterior = exterior;
        self
    }

    /// `(G F)(x)` for one box index; out-of-box neighbors read `exterior`.
    #[inline]
    pub fn apply_at(&self, field: &[f64], idx: usize) -> f64 {
        // pairing +e_i with -e_i makes the result exactly invariant under x -> -x
        let read = |slot| self.bx.neighbor(idx, slot).map_or(self.exterior, |j| field[j]);
        let mut nb = 0.0;
        for axis in 0..self.params.d {
            nb += read(2 * axis) + read(2 * axis + 1);
        }
        if idx == self.bx.origin() {
            self.entries.origin_diag * field[idx] + self.entries.origin_unit * nb
        } else {
            self.entries.diag * field[idx] + self.entries.neighbor * nb
        }
    }

    pub fn apply(&self, field: &[f64], out: &mut [f64]) {
        debug_assert_eq!(field.len(), self.bx.len());
        for (idx, o) in out.iter_mut().enumerate() {
            *o = self.apply_at(field, idx);
        }
    }

    /// Largest absolute row sum, `max(|origin_diag| + 4abd lambda, 8 a d lambda)`.
    pub fn max_row_norm(&self) -> f64 {
        let deg = (2 * self.params.d) as f64;
        (self.entries.origin_diag.abs() + deg * self.entries.origin_unit)
            .max(self.entries.diag.abs() + deg * self.entries.neighbor)
    }

    /// Dense `(n+1) x (n+1)` row-major matrix of the affine system, with the
    /// last coordinate the constant exterior value. Meant for tiny boxes.
    pub fn dense_affine(&self) -> Vec<f64> {
        let n = self.bx.len();
        let m = n + 1;
        let mut mat = vec![0.0; m * m];
        let deg = 2 * self.params.d;
        for idx in 0..n {
            let (diag, off) = if idx == self.bx.origin() {
                (self.entries.origin_diag, self.entries.origin_unit)
            } else {
                (self.entries.diag, self.entries.neighbor)
            };
            mat[idx * m + idx] += diag;
            for slot in 0..deg {
                match self.bx.neighbor(idx, slot) {
                    Some(j) => mat[idx * m + j] += off,
                    None => mat[idx * m + n] += off,
                }
            }
        }
        mat
    }
}
