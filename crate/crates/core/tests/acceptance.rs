//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use cpbounds::bounds::{self, BoundSet};
use cpbounds::ips_sim::{estimate_moments, estimate_survival, estimate_survival_curve, simulate_coupled, ModelParams};
use cpbounds::moment_ode::{build_g, build_k, integrate_f, residual_gk, survival_lower_bound, MomentParams};
use cpbounds::random_walk::{four_step_closed_form, four_step_return, gamma, GreenTable, QuadConfig};
use num_rational::Ratio;

const SEED: u64 = 20_240_601;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn gamma3() -> f64 {
    gamma(3).unwrap().value
}

fn optimal_moment_params(lambda: f64) -> MomentParams {
    let (a, b) = bounds::optimal_ab(gamma3()).unwrap();
    MomentParams::new(3, lambda, a, b).unwrap()
}

fn model(side: usize, lambda: f64) -> ModelParams {
    let (a, b) = bounds::optimal_ab(gamma3()).unwrap();
    ModelParams::new(3, side, lambda, a, b).unwrap()
}

fn within(elapsed: Duration, limit_secs: u64) -> bool {
    elapsed <= Duration::from_secs(limit_secs)
}

fn gamma_reproduction() -> Outcome {
    let start = Instant::now();
    let g = gamma(3).unwrap();
    let elapsed = start.elapsed();
    let oracle = common::gamma_dp(3);
    let rounded = (g.value * 1000.0).round() / 1000.0;
    let diff = (g.value - oracle).abs();
    outcome(
        rounded == 0.659 && diff < 1e-6 && within(elapsed, 5),
        format!("gamma_3 = {:.12} (rounds to {rounded}), oracle {oracle:.12}, |diff| = {diff:.2e}, {elapsed:.2?}", g.value),
    )
}

fn beta_three() -> Outcome {
    let b = bounds::beta(3, gamma3());
    outcome(b <= 0.340 && b > 0.338, format!("beta(3) = {b:.9}"))
}

fn alpha_values() -> Outcome {
    let g = gamma3();
    let (a1, a2) = (bounds::alpha1(g), bounds::alpha2(3, g));
    outcome(
        (0.515..=0.519).contains(&a1) && (0.521..=0.525).contains(&a2),
        format!("alpha1(3) = {a1:.6}, alpha2(3) = {a2:.6}"),
    )
}

fn ordering() -> Outcome {
    let start = Instant::now();
    let table = match bounds::bound_table(3, 10) {
        Ok(t) => t,
        Err(e) => return outcome(false, format!("bound table failed: {e}")),
    };
    let bad: Vec<usize> = table.iter().filter(|s| !s.ordering_holds()).map(|s| s.d).collect();
    let elapsed = start.elapsed();
    let worst = table
        .iter()
        .map(|s: &BoundSet| (s.alpha1.min(s.alpha2) - s.beta).min(s.beta - s.lower))
        .fold(f64::INFINITY, f64::min);
    outcome(
        bad.is_empty() && within(elapsed, 60),
        format!("d = 3..10, failing {bad:?}, smallest gap {worst:.3e}, {elapsed:.2?}"),
    )
}

fn optimizer() -> Outcome {
    let g = gamma3();
    let w = 1.0 / (2.0 - g);
    let num = bounds::maximize_l_numeric(g).unwrap();
    let gap = (num.a - w).abs().max((num.b - w).abs());
    let vgap = (num.value - g / (2.0 - g)).abs();
    outcome(
        gap < 1e-6 && vgap < 1e-9,
        format!("argmax ({:.9}, {:.9}) vs {w:.9}, |point gap| = {gap:.2e}, |value gap| = {vgap:.2e}", num.a, num.b),
    )
}

fn four_step() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    for d in 1..=6usize {
        let exact = four_step_return(d);
        let closed = four_step_closed_form(d);
        ok &= exact == closed;
        if d >= 3 {
            ok &= exact > Ratio::new(1, 2 * d as u64 - 1);
        }
        parts.push(format!("d={d}: {exact}"));
    }
    let elapsed = start.elapsed();
    outcome(ok && within(elapsed, 10), format!("{}, {elapsed:.2?}", parts.join(", ")))
}

fn coupling() -> Outcome {
    let start = Instant::now();
    let times = [1.0, 2.0, 3.0, 4.0, 5.0];
    let mut runs = 0;
    let mut failures = Vec::new();
    for lambda in [0.2, 0.36, 0.6] {
        let p = model(8, lambda);
        for seed in 0..100 {
            runs += 1;
            match simulate_coupled(&p, &times, SEED + seed) {
                Ok(run) if run.coupling_holds() => {}
                Ok(_) => failures.push(format!("lambda={lambda} seed={seed}")),
                Err(e) => failures.push(format!("lambda={lambda} seed={seed}: {e}")),
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        failures.is_empty() && within(elapsed, 60),
        format!("{runs} runs x {} snapshots, mismatches {failures:?}, {elapsed:.2?}", times.len()),
    )
}

/// Criteria 8 and 9 share one batch of 10^4 replicas on the L = 12 torus.
struct MomentRun {
    estimates: Vec<cpbounds::ips_sim::MomentEstimate>,
    elapsed: Duration,
}

fn moment_run() -> MomentRun {
    let start = Instant::now();
    let estimates = estimate_moments(&model(12, 0.36), &[0.5, 1.0, 2.0, 4.0], 2, 10_000, SEED).unwrap();
    MomentRun {
        estimates,
        elapsed: start.elapsed(),
    }
}

fn mean_identity(run: &MomentRun) -> Outcome {
    let mut ok = within(run.elapsed, 600);
    let mut parts = Vec::new();
    for est in &run.estimates {
        let z = (est.mean.value - 1.0).abs() / est.mean.std_error;
        ok &= z < 3.0;
        parts.push(format!("t={}: {:.5} +- {:.5} (z={z:.2})", est.time, est.mean.value, est.mean.std_error));
    }
    outcome(ok, format!("{}, {:.2?}", parts.join(", "), run.elapsed))
}

fn ode_vs_mc(run: &MomentRun) -> Outcome {
    let start = Instant::now();
    let op = build_g(&optimal_moment_params(0.36), 8).unwrap();
    let times = [0.5, 1.0, 2.0];
    let ode = integrate_f(&op, &times, 0.02).unwrap();
    let bx = op.displacement_box();
    let mut worst_z = 0.0_f64;
    let mut worst_at = String::new();
    let mut compared = 0;
    for (field, &t) in ode.fields.iter().zip(&times) {
        let est = run.estimates.iter().find(|e| e.time == t).unwrap();
        for e in &est.second {
            compared += 1;
            let want = field.values[bx.index_of(&e.displacement).unwrap()];
            let z = (e.value - want).abs() / e.std_error;
            if z > worst_z {
                worst_z = z;
                worst_at = format!("t={t} x={:?} mc={:.5}+-{:.5} ode={want:.5}", e.displacement, e.value, e.std_error);
            }
        }
    }
    let elapsed = run.elapsed + start.elapsed();
    outcome(
        worst_z < 3.0 && within(elapsed, 900),
        format!("{compared} comparisons (max-norm <= 2), largest z = {worst_z:.2} at {worst_at}, {elapsed:.2?}"),
    )
}

fn null_vector() -> Outcome {
    let start = Instant::now();
    let table = GreenTable::quadrature(3, 8, &QuadConfig::default()).unwrap();
    let p = optimal_moment_params(0.36);
    let k = build_k(&p, &table, 8).unwrap();
    let op = build_g(&p, 8).unwrap();
    let residual = residual_gk(&op, &k).unwrap();

    // synthetic perturbation of H away from O and the unit displacements
    let bx = table.displacement_box().clone();
    let residual_for = |eps: f64| {
        let h: Vec<f64> = table
            .hitting_values()
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let r1: i64 = bx.displacement(i).iter().map(|c| c.abs()).sum();
                if r1 <= 1 {
                    v
                } else {
                    v + eps * (((i * 2654435761) % 1000) as f64 / 1000.0 - 0.5)
                }
            })
            .collect();
        let t = GreenTable::from_hitting(bx.clone(), h, eps).unwrap();
        residual_gk(&op, &build_k(&p, &t, 8).unwrap()).unwrap()
    };
    let (r1, r2) = (residual_for(1e-6), residual_for(2e-6));
    let ratio = r2 / r1;
    let elapsed = start.elapsed();
    outcome(
        residual < 1e-6 && (ratio - 2.0).abs() <= 0.2 && within(elapsed, 10),
        format!("residual {residual:.2e}, perturbation response {r1:.3e} -> {r2:.3e} (ratio {ratio:.4}), {elapsed:.2?}"),
    )
}

fn ceiling() -> Outcome {
    let start = Instant::now();
    let table = GreenTable::quadrature(3, 8, &QuadConfig::default()).unwrap();
    let p = optimal_moment_params(0.36);
    let k = build_k(&p, &table, 8).unwrap();
    let op = build_g(&p, 8).unwrap();
    let times: Vec<f64> = (1..=50).map(|i| 0.1 * i as f64).collect();
    let traj = integrate_f(&op, &times, 0.02).unwrap();
    let series = traj.origin_series(op.displacement_box().origin());
    let peak = series.iter().map(|s| s.1).fold(f64::NEG_INFINITY, f64::max);
    let elapsed = start.elapsed();
    outcome(
        peak <= k.ceiling() + 1e-6 && within(elapsed, 60),
        format!(
            "max F_t(O) over t <= 5 is {peak:.6}, ceiling K(O)/inf K = {:.6}, integrator error {:.1e}, {elapsed:.2?}",
            k.ceiling(),
            traj.error_estimate
        ),
    )
}

fn survival_floor() -> Outcome {
    let start = Instant::now();
    let table = GreenTable::quadrature(3, 2, &QuadConfig::default()).unwrap();
    let floor = survival_lower_bound(&optimal_moment_params(0.36), &table, 2).unwrap().floor;
    let est = estimate_survival(&model(16, 0.36), 20.0, 10_000, SEED).unwrap();
    let elapsed = start.elapsed();
    outcome(
        est.value >= floor - 3.0 * est.std_error - 0.02 && within(elapsed, 900),
        format!(
            "survival {:.5} +- {:.5} vs floor c/(1+c) = {floor:.5} (finite torus, finite t; qualitative), {elapsed:.2?}",
            est.value, est.std_error
        ),
    )
}

fn monotonicity() -> Outcome {
    let start = Instant::now();
    let lambdas = [0.2, 0.36, 0.6];
    let times = [2.0, 3.0];
    let curves: Vec<_> = lambdas
        .iter()
        .map(|&l| estimate_survival_curve(&model(12, l), &times, 10_000, SEED).unwrap())
        .collect();
    let mut checked = 0;
    let mut worst = f64::INFINITY;
    for (i, &l1) in lambdas.iter().enumerate() {
        for (j, &l2) in lambdas.iter().enumerate() {
            if l1 < l2 {
                continue;
            }
            for (si, &s) in times.iter().enumerate() {
                for (ti, &t) in times.iter().enumerate() {
                    if s >= t {
                        continue;
                    }
                    let (a, b) = (&curves[i][si], &curves[j][ti]);
                    let se = (a.std_error.powi(2) + b.std_error.powi(2)).sqrt();
                    worst = worst.min((a.value - b.value) / se + 3.0);
                    checked += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let table: Vec<String> = lambdas
        .iter()
        .zip(&curves)
        .map(|(l, c)| format!("lambda={l}: {:.4}/{:.4}", c[0].value, c[1].value))
        .collect();
    outcome(
        worst >= 0.0 && within(elapsed, 600),
        format!("{checked} ordered pairs, smallest margin {worst:.2} SE, [{}], {elapsed:.2?}", table.join("; ")),
    )
}

fn main() {
    let mut failed = 0;
    let mut report = |id: usize, name: &str, o: Outcome| {
        println!("{} [{id:>2}] {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.pass {
            failed += 1;
        }
    };
    report(1, "return probability gamma_3", gamma_reproduction());
    report(2, "improved bound beta(3)", beta_three());
    report(3, "earlier bounds alpha1(3), alpha2(3)", alpha_values());
    report(4, "bound ordering d = 3..10", ordering());
    report(5, "weight optimizer", optimizer());
    report(6, "four-step return identity", four_step());
    report(7, "pathwise coupling", coupling());
    let run = moment_run();
    report(8, "mean conservation", mean_identity(&run));
    report(9, "moment ODE vs Monte Carlo", ode_vs_mc(&run));
    report(10, "null vector residual", null_vector());
    report(11, "second-moment ceiling", ceiling());
    report(12, "survival floor (soft)", survival_floor());
    report(13, "monotonicity", monotonicity());
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
