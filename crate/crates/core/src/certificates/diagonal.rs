use super::fit_growth;
use crate::algebra::{coeff_norm, MultilinearForm};
use crate::normopt::{form_norm_lower_with, AlternatingOptions, BallSpec};
use crate::{exec::cell_seed, Error, Execution, Result, Tolerances};
use serde::{Deserialize, Serialize};

/// `A_n(x, y) = Σ_{j ≤ n} x_j y_j`.
pub fn diagonal_form(n: usize) -> Result<MultilinearForm> {
    MultilinearForm::identity_bilinear(n)
}

/// `‖A_n‖ = n^{1/λ}` on `ℓ_p × ℓ_q`, `1/λ = 1 − 1/p − 1/q`, attained at constant vectors.
pub fn diagonal_norm_exact(n: usize, p: f64, q: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    if !(p >= 1.0 && q >= 1.0) {
        return Err(Error::Regime(format!("need p, q >= 1, got ({p}, {q})")));
    }
    let inv_lambda = 1.0 - 1.0 / p - 1.0 / q;
    if inv_lambda <= 0.0 {
        return Err(Error::Regime(format!("need 1/p + 1/q < 1, got ({p}, {q})")));
    }
    Ok((n as f64).powf(inv_lambda))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagonalRow {
    pub p: f64,
    pub q: f64,
    pub lambda: f64,
    pub n: usize,
    pub seed: u64,
    pub lower: f64,
    pub exact: f64,
    pub rel_err: f64,
    /// `coeff_norm(A_n, λ) / ‖A_n‖`: stays at 1.
    pub ratio_at_lambda: f64,
    /// `coeff_norm(A_n, r) / ‖A_n‖` for the test exponent `r < λ`.
    pub ratio_at_test: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagonalFit {
    pub p: f64,
    pub q: f64,
    pub lambda: f64,
    pub test_exponent: f64,
    pub slope: f64,
    /// `1/r − 1/λ`.
    pub expected_slope: f64,
    pub max_rel_err: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagonalReport {
    pub rows: Vec<DiagonalRow>,
    pub fits: Vec<DiagonalFit>,
}

/// Measures `‖A_n‖` by alternating maximization on each `(p, q)` and size.
///
/// The test exponent for each pair is `test_factor · λ`.
pub fn diagonal_sharpness(
    pairs: &[(f64, f64)],
    sizes: &[usize],
    test_factor: f64,
    restarts: usize,
    seed: u64,
    execution: Execution,
) -> Result<DiagonalReport> {
    if !(test_factor > 0.0 && test_factor < 1.0) {
        return Err(Error::InvalidArgument(format!("test factor must lie in (0,1), got {test_factor}")));
    }
    let cells: Vec<(f64, f64, usize)> = pairs
        .iter()
        .flat_map(|&(p, q)| sizes.iter().map(move |&n| (p, q, n)))
        .collect();
    let rows = execution.map_slice(&cells, |&(p, q, n)| -> Result<DiagonalRow> {
        let exact = diagonal_norm_exact(n, p, q)?;
        let lambda = 1.0 / (1.0 - 1.0 / p - 1.0 / q);
        let a = diagonal_form(n)?;
        let cs = cell_seed(seed, &format!("p={p},q={q},n={n}"));
        let opts = AlternatingOptions { restarts, seed: cs, execution, tolerances: Tolerances::DEFAULT };
        let est = form_norm_lower_with(&a, &BallSpec::new(vec![p, q])?, &opts)?;
        Ok(DiagonalRow {
            p,
            q,
            lambda,
            n,
            seed: cs,
            lower: est.value,
            exact,
            rel_err: (est.value - exact).abs() / exact,
            ratio_at_lambda: coeff_norm(&a, lambda)? / est.value,
            ratio_at_test: coeff_norm(&a, test_factor * lambda)? / est.value,
        })
    });
    let rows: Vec<DiagonalRow> = rows.into_iter().collect::<Result<_>>()?;
    let mut fits = Vec::new();
    for &(p, q) in pairs {
        let sub: Vec<&DiagonalRow> = rows.iter().filter(|r| r.p == p && r.q == q).collect();
        let ns: Vec<f64> = sub.iter().map(|r| r.n as f64).collect();
        let ratios: Vec<f64> = sub.iter().map(|r| r.ratio_at_test).collect();
        let fit = fit_growth(&ns, &ratios)?;
        let lambda = sub[0].lambda;
        let r = test_factor * lambda;
        fits.push(DiagonalFit {
            p,
            q,
            lambda,
            test_exponent: r,
            slope: fit.slope,
            expected_slope: 1.0 / r - 1.0 / lambda,
            max_rel_err: sub.iter().map(|r| r.rel_err).fold(0.0, f64::max),
        });
    }
    Ok(DiagonalReport { rows, fits })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_values() {
        assert!((diagonal_norm_exact(4, 4.0, 4.0).unwrap() - 2.0).abs() < 1e-15);
        assert_eq!(diagonal_norm_exact(1, f64::INFINITY, f64::INFINITY).unwrap(), 1.0);
        assert!((diagonal_norm_exact(9, 3.0, 3.0).unwrap() - 9f64.powf(1.0 / 3.0)).abs() < 1e-14);
        assert!(diagonal_norm_exact(4, 2.0, 2.0).is_err());
    }

    #[test]
    fn diagonal_coefficient_norm() {
        for n in [1usize, 3, 7] {
            let a = diagonal_form(n).unwrap();
            for r in [1.0, 2.5, f64::INFINITY] {
                let expected = if r.is_infinite() { 1.0 } else { (n as f64).powf(1.0 / r) };
                assert!((coeff_norm(&a, r).unwrap() - expected).abs() < 1e-12);
            }
        }
        assert_eq!(diagonal_form(1).unwrap().entries().len(), 1);
    }

    #[test]
    fn optimizer_matches_exact() {
        for (n, p, q) in [(4usize, 4.0, 4.0), (9, 3.0, 3.0)] {
            let est = crate::normopt::form_norm_lower(&diagonal_form(n).unwrap(), &BallSpec::new(vec![p, q]).unwrap(), 8, 0)
                .unwrap();
            let exact = diagonal_norm_exact(n, p, q).unwrap();
            assert!((est.value - exact).abs() < 1e-6 * exact);
        }
    }
}
