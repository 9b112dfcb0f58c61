mod common;

use common::*;
use hlab::algebra::{coeff_norm, HomogeneousPolynomial, ScalarField};
use hlab::certificates::{
    choi_kim_scan, diagonal_form, diagonal_sharpness, fit_growth, ratio, sharpness_experiment, RatioObject,
    SharpnessOptions,
};
use hlab::normopt::{form_norm_lower, BallSpec};
use hlab::theory::ExponentPair;
use hlab::{Execution, Scalar};
use proptest::prelude::*;

#[test]
fn diagonal_norm_grid() {
    let pairs = [(4.0, 4.0), (3.0, 3.0), (6.0, 3.0), (2.5, 8.0), (f64::INFINITY, 5.0)];
    let report = diagonal_sharpness(&pairs, &[2, 4, 8, 16, 32], 0.5, 8, 3, Execution::Parallel).unwrap();
    for r in &report.rows {
        // oracle: Hölder equality at constant vectors
        let exact = (r.n as f64).powf(1.0 - 1.0 / r.p - 1.0 / r.q);
        assert!((r.lower - exact).abs() <= 1e-6 * exact, "{r:?}");
        assert!((r.ratio_at_lambda - 1.0).abs() <= 1e-6);
    }
    for f in &report.fits {
        assert!((f.slope - (1.0 / f.test_exponent - 1.0 / f.lambda)).abs() <= 0.05, "{f:?}");
    }
}

#[test]
fn diagonal_ratio_at_lambda_is_flat() {
    for n in [2usize, 8, 32] {
        let a = diagonal_form(n).unwrap();
        let est = form_norm_lower(&a, &BallSpec::new(vec![4.0, 4.0]).unwrap(), 8, 0).unwrap();
        assert!((coeff_norm(&a, 2.0).unwrap() / est.value - 1.0).abs() <= 1e-6);
    }
}

#[test]
fn coarse_choi_kim_ceiling() {
    let scan = choi_kim_scan(0.05, 8, 1, Execution::Parallel).unwrap();
    assert!((scan.max_ratio - 2.0).abs() <= 1e-4);
    assert_eq!(scan.argmax_c.abs(), 2.0);
    assert!(scan.rows.iter().all(|r| r.ratio <= 2.0 + 1e-4));
}

#[test]
fn ksz_reports_are_reproducible_and_data_driven() {
    let balls = BallSpec::uniform(f64::INFINITY, 2).unwrap();
    let pair = ExponentPair::new(2.0, 1.0).unwrap();
    let opts = SharpnessOptions { seeds_per_size: 3, restarts: 8, execution: Execution::Parallel };
    let a = sharpness_experiment(2, &balls, pair, &[4, 8, 16], 42, &opts).unwrap();
    let seq = SharpnessOptions { execution: Execution::Sequential, ..opts };
    assert_eq!(a, sharpness_experiment(2, &balls, pair, &[4, 8, 16], 42, &seq).unwrap());
    let sizes: Vec<f64> = a.sizes.iter().map(|&n| n as f64).collect();
    let fit = fit_growth(&sizes, &a.observed).unwrap();
    assert_eq!(fit.slope, a.slope);
    assert_eq!(a.implied_bound, 1.0 / (a.slope - 0.5));
    // a sub-grid reproduces the cells of the full grid
    let sub = sharpness_experiment(2, &balls, pair, &[8, 16, 32], 42, &opts).unwrap();
    for c in sub.cells.iter().filter(|c| c.size != 32) {
        assert!(a.cells.contains(c));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ratio_is_scale_invariant(
        p in (1usize..=3, 2usize..=3).prop_flat_map(|(n, m)| polynomial_in(n, m, ScalarField::Real)),
        t in prop_oneof![Just(2.0), Just(-0.5), Just(8.0), Just(-1.0), Just(0.25)],
        ball in prop_oneof![Just(2.0), Just(3.0), Just(f64::INFINITY)],
    ) {
        prop_assume!(!p.is_zero());
        let balls = BallSpec::new(vec![ball]).unwrap();
        let base = ratio(RatioObject::Polynomial(&p), &balls, 2.0).unwrap();
        let q: HomogeneousPolynomial = p.scaled(Scalar::new(t, 0.0));
        let scaled = ratio(RatioObject::Polynomial(&q), &balls, 2.0).unwrap();
        prop_assert_eq!(base.ratio, scaled.ratio);
    }

    #[test]
    fn ratio_scale_invariance_general_factor(
        p in (1usize..=3, 2usize..=3).prop_flat_map(|(n, m)| polynomial_in(n, m, ScalarField::Real)),
        t in prop_oneof![-10.0..-0.1f64, 0.1..10.0f64],
    ) {
        prop_assume!(!p.is_zero());
        let balls = BallSpec::new(vec![3.0]).unwrap();
        let base = ratio(RatioObject::Polynomial(&p), &balls, 1.5).unwrap().ratio;
        let scaled = ratio(RatioObject::Polynomial(&p.scaled(Scalar::new(t, 0.0))), &balls, 1.5).unwrap().ratio;
        prop_assert!(close(base, scaled, 1e-9), "{} vs {}", base, scaled);
    }
}
