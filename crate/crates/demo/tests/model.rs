use cpbounds_demo::model::{bound_row, null_vector_summary, origin_curve, weighted_bound, Planar};

#[test]
fn bound_row_three() {
    let row = bound_row(3).unwrap();
    assert_eq!((row[0] * 1000.0).round() / 1000.0, 0.659);
    assert!(row[3] <= 0.340 && row[4] < row[3]);
    assert!(bound_row(2).is_err());
}

#[test]
fn weighted_bound_at_unit_weights() {
    let g = bound_row(3).unwrap()[0];
    assert!((weighted_bound(3, 1.0, 1.0, g).unwrap() - bound_row(3).unwrap()[2]).abs() < 1e-15);
    assert_eq!(weighted_bound(3, 0.01, 0.01, g), None);
}

#[test]
fn planar_run_stays_coupled() {
    let mut demo = Planar::new(32, 0.9, 0.8, 0.8, 1).unwrap();
    for _ in 0..20 {
        demo.advance(0.25).unwrap();
        assert!(demo.coupling_holds());
    }
    assert!((demo.time() - 5.0).abs() < 1e-12);
    let occ = demo.occupied();
    let logs = demo.log_xi();
    assert_eq!(occ.len(), 1024);
    assert!(occ.iter().zip(&logs).all(|(&o, l)| (o == 1) == !l.is_nan()));
    assert!(demo.density() > 0.0 && demo.mean_xi() > 0.0);
}

#[test]
fn curve_stays_below_ceiling() {
    let w = 1.0 / (2.0 - bound_row(3).unwrap()[0]);
    let summary = null_vector_summary(3, 0.36, w, w, 6).unwrap();
    assert!(summary[4] < 1e-6);
    let curve = origin_curve(3, 0.36, w, w, 6, 5.0, 10).unwrap();
    assert_eq!(curve.len(), 20);
    assert!(curve.chunks(2).all(|p| p[1] <= summary[1]));
}
