//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.

use hlab::algebra::{coeff_norm, mixed_norm_bilinear, HomogeneousPolynomial, MultilinearForm, ScalarField};
use hlab::certificates::{
    choi_kim_scan, diagonal_sharpness, limit_trace_p_to_m, minkowski_interchange_check, search_constant_lower,
    sharpness_experiment, verify_inequality, SharpnessOptions, VerifyOptions,
};
use hlab::normopt::{alternating_ascent, norming_vector, poly_norm_lower, vector_norm, BallSpec};
use hlab::theory::{
    bilinear_mixed_exponents, branch_exponents, interpolate_exponent_pairs, ksz_exponent, multilinear_exponent,
    polynomial_exponent, symmetric_exponent, ExponentPair,
};
use hlab::{Execution, Scalar, Tolerances};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use std::time::{Duration, Instant};

const INF: f64 = f64::INFINITY;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn exact_norm() -> Outcome {
    let p = HomogeneousPolynomial::real(2, 2, &[(&[1, 1], 1.0)]).unwrap();
    let est = poly_norm_lower(&p, 2.0, Tolerances::DEFAULT.default_restarts, 0).unwrap();
    outcome((est.value - 0.5).abs() <= 1e-8, format!("norm(x1 x2) = {:.12}", est.value))
}

fn optimal_constant() -> Outcome {
    let scan = choi_kim_scan(1e-3, 8, 0, Execution::Parallel).unwrap();
    let search = search_constant_lower(2, 2, 2.0, ScalarField::Real, INF, 10_000, 0).unwrap();
    let ok = (scan.max_ratio - 2.0).abs() <= 1e-4 && search.best_ratio >= 1.999 && search.evaluations <= 10_000;
    outcome(
        ok,
        format!(
            "scan max ratio {:.8} at c = {}, search {:.6} after {} evaluations",
            scan.max_ratio, scan.argmax_c, search.best_ratio, search.evaluations
        ),
    )
}

fn limit_trace_consistency() -> Outcome {
    let p = HomogeneousPolynomial::real(2, 2, &[(&[1, 1], 1.0)]).unwrap();
    let ps = [3.0, 2.5, 2.1];
    let mut worst: f64 = 0.0;
    for &pi in &ps {
        let trace = limit_trace_p_to_m(&p, &[pi], polynomial_exponent(2, pi).unwrap()).unwrap();
        worst = worst.max((trace[0] - 2f64.powf(2.0 / pi)).abs());
    }
    let trace = limit_trace_p_to_m(&p, &ps, polynomial_exponent(2, 3.0).unwrap()).unwrap();
    let search = search_constant_lower(2, 2, 4.0, ScalarField::Real, polynomial_exponent(2, 4.0).unwrap(), 2_000, 0).unwrap();
    let ok = worst <= 1e-6 && trace.len() == 3 && search.best_ratio >= 2f64.sqrt() - 1e-3;
    outcome(ok, format!("max trace error {worst:.2e}, search at p = 4 reached {:.6}", search.best_ratio))
}

fn diagonal() -> Outcome {
    let pairs = [(4.0, 4.0), (3.0, 3.0), (6.0, 3.0)];
    let report = diagonal_sharpness(&pairs, &[2, 4, 8, 16, 32], 0.5, 8, 0, Execution::Parallel).unwrap();
    let norm_ok = report.rows.iter().all(|r| r.rel_err <= 1e-6);
    let slope_ok = report.fits.iter().all(|f| (f.slope - f.expected_slope).abs() <= Tolerances::DEFAULT.diagonal_slope_band);
    let slopes: Vec<String> = report.fits.iter().map(|f| format!("{:.4}/{:.4}", f.slope, f.expected_slope)).collect();
    let worst = report.rows.iter().map(|r| r.rel_err).fold(0.0, f64::max);
    outcome(norm_ok && slope_ok, format!("max rel err {worst:.2e}, slopes (fit/expected) {}", slopes.join(" ")))
}

fn ksz() -> Outcome {
    let opts = SharpnessOptions::default();
    let sizes = [4, 8, 16, 32];
    let inf_balls = BallSpec::uniform(INF, 2).unwrap();
    let a = sharpness_experiment(2, &inf_balls, bilinear_mixed_exponents(INF, INF).unwrap(), &sizes, 0, &opts).unwrap();
    let three = BallSpec::uniform(3.0, 2).unwrap();
    let b = sharpness_experiment(2, &three, ExponentPair::new(2.0, 2.0).unwrap(), &sizes, 0, &opts).unwrap();
    let target = ksz_exponent(2, &[3.0, 3.0]).unwrap();
    let ok = (1.40..=1.65).contains(&a.slope) && (b.slope - target).abs() <= Tolerances::DEFAULT.ksz_slope_band;
    outcome(ok, format!("slope at p = q = inf {:.4} (theory 1.5), at p = q = 3 {:.4} (theory {target:.4})", a.slope, b.slope))
}

fn exponent_algebra() -> Outcome {
    let mut ok = (multilinear_exponent(2, INF).unwrap() - 4.0 / 3.0).abs() <= 1e-12;
    for m in [2usize, 3, 4] {
        let (high, low) = branch_exponents(m, 2.0 * m as f64);
        ok &= (high - 2.0).abs() <= 1e-12 && (low - 2.0).abs() <= 1e-12;
    }
    let mut worst: f64 = 0.0;
    let grid = [4.0, 5.0, 6.0, 8.0, 10.0];
    let mut points = 0;
    for &p in &grid {
        for &q in &[4.0, 5.0, 7.0, 12.0] {
            let lambda = 1.0 / (1.0 - 1.0 / p - 1.0 / q);
            let a = ExponentPair::new(2.0, lambda).unwrap();
            let mid = interpolate_exponent_pairs(a, a.swapped(), 0.5).unwrap();
            let s = symmetric_exponent(p, q).unwrap();
            worst = worst.max((mid.inner - s).abs()).max((mid.outer - s).abs());
            points += 1;
        }
    }
    ok &= worst <= 1e-12 && points == 20;
    outcome(ok, format!("interpolation identity max error {worst:.2e} on {points} points"))
}

fn verification() -> Outcome {
    let report = verify_inequality(2, 8, 3.0, 200, 0, &VerifyOptions::default()).unwrap();
    let ok = report.exponent == 3.0 && report.verified * 100 >= 95 * 200 && report.violations == 0;
    outcome(ok, format!("{}/200 verified, {} rigorous violations", report.verified, report.violations))
}

fn scalar(complex: bool) -> BoxedStrategy<Scalar> {
    if complex {
        (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(a, b)| Scalar::new(a, b)).boxed()
    } else {
        (-2.0..2.0f64).prop_map(|a| Scalar::new(a, 0.0)).boxed()
    }
}

fn polynomial_strategy() -> impl Strategy<Value = HomogeneousPolynomial> {
    (1usize..=6, 1usize..=4, any::<bool>()).prop_flat_map(|(n, m, complex)| {
        let d = hlab::algebra::enumerate_multi_indices(n, m).unwrap().len();
        let field = if complex { ScalarField::Complex } else { ScalarField::Real };
        prop::collection::vec(scalar(complex), d)
            .prop_map(move |dense| HomogeneousPolynomial::from_dense(n, m, field, &dense).unwrap())
    })
}

fn matrix_strategy(n: usize) -> impl Strategy<Value = MultilinearForm> {
    prop::collection::vec(-5.0..5.0f64, n * n).prop_map(move |e| MultilinearForm::from_real(n, 2, &e).unwrap())
}

fn run<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    let mut runner = TestRunner::new_with_rng(
        Config { cases, failure_persistence: None, ..Config::default() },
        proptest::test_runner::TestRng::deterministic_rng(proptest::test_runner::RngAlgorithm::ChaCha),
    );
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn properties() -> Outcome {
    let mut failures = Vec::new();
    let mut check = |name: &str, r: Result<(), String>| {
        if let Err(e) = r {
            failures.push(format!("{name}: {e}"));
        }
    };
    check(
        "polarization",
        run(256, polynomial_strategy(), |p| {
            let back = p.polarize().restrict().map_err(|e| TestCaseError::fail(e.to_string()))?;
            let scale = coeff_norm(&p, INF).unwrap().max(1.0);
            for (a, b) in p.dense_coefficients().iter().zip(back.dense_coefficients()) {
                prop_assert!((a - b).norm() <= 1e-12 * scale);
            }
            Ok(())
        }),
    );
    check(
        "norming",
        run(
            512,
            (prop::collection::vec(scalar(true), 1..8), prop_oneof![Just(1.0), Just(INF), 1.01..20.0f64]),
            |(phi, p)| {
                prop_assume!(phi.iter().any(|f| f.norm() > 0.0));
                let (x, value) = norming_vector(&phi, p).unwrap();
                let pairing: Scalar = phi.iter().zip(&x).map(|(f, v)| f * v).sum();
                prop_assert!((pairing.re - value).abs() <= 1e-12 * value.max(1.0));
                prop_assert!(pairing.im.abs() <= 1e-12 * value.max(1.0));
                prop_assert!((vector_norm(&x, p) - 1.0).abs() <= 1e-12);
                Ok(())
            },
        ),
    );
    check(
        "monotone ascent",
        run(
            128,
            (matrix_strategy(4), 1.0..8.0f64, 1.0..8.0f64, prop::collection::vec(-1.0..1.0f64, 8)),
            |(t, p, q, start)| {
                let balls = BallSpec::new(vec![p, q]).unwrap();
                let init = vec![
                    start[..4].iter().map(|&v| Scalar::new(v, 0.0)).collect(),
                    start[4..].iter().map(|&v| Scalar::new(v, 0.0)).collect(),
                ];
                let run = alternating_ascent(&t, &balls, init, &Tolerances::DEFAULT).unwrap();
                for w in run.trace.windows(2) {
                    prop_assert!(w[1] >= w[0] * (1.0 - 1e-12));
                }
                Ok(())
            },
        ),
    );
    check(
        "interchange",
        run(1000, matrix_strategy(5), |a| {
            prop_assert!(minkowski_interchange_check(&a, 1.5).unwrap().holds);
            Ok(())
        }),
    );
    check(
        "mixed collapse and monotonicity",
        run(256, (matrix_strategy(5), 1.0..6.0f64, 0.0..4.0f64), |(a, r, d)| {
            let plain = coeff_norm(&a, r).unwrap();
            prop_assert!((mixed_norm_bilinear(&a, r, r).unwrap() - plain).abs() <= 1e-12 * plain.max(1.0));
            prop_assert!(coeff_norm(&a, r + d).unwrap() <= plain * (1.0 + 1e-12));
            Ok(())
        }),
    );
    let ok = failures.is_empty();
    outcome(ok, if ok { "all suites clean".to_string() } else { failures.join("; ") })
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("exact norm of x1 x2", Duration::from_secs(1), exact_norm),
        ("optimal real constant 2", Duration::from_secs(30), optimal_constant),
        ("limit trace 2^(2/p)", Duration::from_secs(60), limit_trace_consistency),
        ("diagonal sharpness", Duration::from_secs(120), diagonal),
        ("random sign slopes", Duration::from_secs(300), ksz),
        ("exponent algebra", Duration::from_secs(1), exponent_algebra),
        ("inequality verification", Duration::from_secs(120), verification),
        ("property suites", Duration::from_secs(60), properties),
    ];
    let mut failed = 0;
    for (i, (name, budget, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = f();
        let elapsed = start.elapsed();
        let ok = out.ok && elapsed <= *budget;
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {}: {} {name}: {} [{:.2?} of {:?}]",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            out.detail,
            elapsed,
            budget
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
