use cpbounds::moment_ode::{build_g, build_k, integrate_f, residual_field, residual_gk, MomentParams};
use cpbounds::random_walk::{GreenTable, QuadConfig};
use nalgebra::DMatrix;

fn table(radius: usize) -> GreenTable {
    GreenTable::quadrature(3, radius, &QuadConfig::default()).unwrap()
}

fn optimal(lambda: f64, gamma: f64) -> MomentParams {
    let w = 1.0 / (2.0 - gamma);
    MomentParams::new(3, lambda, w, w).unwrap()
}

/// `exp(A)` by Taylor series after scaling to norm below 1/2, then squaring.
fn expm(a: &DMatrix<f64>) -> DMatrix<f64> {
    let norm = a.row_iter().map(|r| r.iter().map(|v| v.abs()).sum::<f64>()).fold(0.0, f64::max);
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let scaled = a / 2f64.powi(squarings as i32);
    let n = a.nrows();
    let mut result = DMatrix::<f64>::identity(n, n);
    let mut term = DMatrix::<f64>::identity(n, n);
    for k in 1..30 {
        term = &term * &scaled / k as f64;
        result += &term;
    }
    for _ in 0..squarings {
        result = &result * &result;
    }
    result
}

#[test]
fn rk4_matches_matrix_exponential_on_tiny_box() {
    for (lambda, a, b) in [(0.36, 0.7457, 0.7457), (0.55, 1.0, 1.0), (0.3, 0.6, 1.2)] {
        let params = MomentParams::new(3, lambda, a, b).unwrap();
        let op = build_g(&params, 2).unwrap();
        let n = op.displacement_box().len();
        let mat = DMatrix::from_row_slice(n + 1, n + 1, &op.dense_affine());
        let times = [0.5, 1.0, 2.0];
        let traj = integrate_f(&op, &times, 0.01).unwrap();
        for (field, &t) in traj.fields.iter().zip(&times) {
            let e = expm(&(&mat * t));
            let ones = DMatrix::from_element(n + 1, 1, 1.0);
            let exact = e * ones;
            for i in 0..n {
                let diff = (field.values[i] - exact[(i, 0)]).abs();
                assert!(diff < 1e-9 * exact[(i, 0)].max(1.0), "lambda={lambda} t={t} i={i}: {diff}");
            }
        }
        assert!(traj.error_estimate < 1e-6, "{}", traj.error_estimate);
    }
}

#[test]
fn radius_doubling_converges() {
    let g = table(1).gamma();
    let p = optimal(0.36, g);
    let at = |r| {
        let op = build_g(&p, r).unwrap();
        let tr = integrate_f(&op, &[2.0], 0.02).unwrap();
        tr.fields[0].values[op.displacement_box().origin()]
    };
    let diff = (at(8) - at(12)).abs();
    assert!(diff < 1e-4, "{diff}");
}

#[test]
fn ceiling_bounds_origin_correlation() {
    let t = table(8);
    let p = optimal(0.36, t.gamma());
    let k = build_k(&p, &t, 8).unwrap();
    let op = build_g(&p, 8).unwrap();
    let times: Vec<f64> = (1..=20).map(|i| 0.25 * i as f64).collect();
    let tr = integrate_f(&op, &times, 0.02).unwrap();
    for (time, f0) in tr.origin_series(op.displacement_box().origin()) {
        assert!(f0 <= k.ceiling() + 1e-6, "t={time}: {f0} > {}", k.ceiling());
        assert!(f0 >= 1.0);
    }
    for field in &tr.fields {
        assert!(field.values.iter().all(|&v| v > 0.0));
    }
}

#[test]
fn residual_is_linear_in_injected_error() {
    let t = table(6);
    let p = optimal(0.36, t.gamma());
    let bx = t.displacement_box().clone();
    let base = t.hitting_values().to_vec();
    let perturbed = |eps: f64| {
        let h: Vec<f64> = base
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let x = bx.displacement(i);
                let r1: i64 = x.iter().map(|c| c.abs()).sum();
                if r1 <= 1 {
                    v
                } else {
                    v + eps * ((i * 7919 % 13) as f64 / 13.0 - 0.5)
                }
            })
            .collect();
        let table = GreenTable::from_hitting(bx.clone(), h, eps).unwrap();
        let k = build_k(&p, &table, 6).unwrap();
        residual_gk(&build_g(&p, 6).unwrap(), &k).unwrap()
    };
    let r1 = perturbed(1e-6);
    let r2 = perturbed(2e-6);
    let ratio = r2 / r1;
    assert!((ratio - 2.0).abs() < 0.2, "ratio {ratio}");
}

#[test]
fn residual_vanishes_off_boundary_for_quadrature_h() {
    let t = table(8);
    let p = optimal(0.36, t.gamma());
    let k = build_k(&p, &t, 8).unwrap();
    let op = build_g(&p, 8).unwrap();
    let field = residual_field(&op, &k).unwrap();
    let bound = (4.0 * p.a * 3.0 * p.lambda + op.entries().origin_diag.abs() + 12.0 * op.entries().origin_unit)
        * t.hitting_error.max(1e-12);
    let worst = field.iter().map(|v| v.abs()).fold(0.0, f64::max);
    assert!(worst <= 10.0 * bound + 1e-12, "{worst} vs {bound}");
}
