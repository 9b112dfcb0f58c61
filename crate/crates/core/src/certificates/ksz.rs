use super::fit_growth;
use crate::algebra::{coeff_norm, mixed_norm_bilinear, MultilinearForm, ScalarField};
use crate::exec::cell_seed;
use crate::normopt::{form_norm_lower_with, AlternatingOptions, BallSpec};
use crate::theory::{ksz_exponent, ExponentPair};
use crate::{Error, Execution, Result, Scalar, Tolerances};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// `m`-linear form on `K^N` with independent uniform `±1` entries.
pub fn ksz_random_form(m: usize, n: usize, seed: u64) -> Result<MultilinearForm> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    MultilinearForm::from_fn(n, m, ScalarField::Real, |_| {
        Scalar::new(if rng.random::<bool>() { 1.0 } else { -1.0 }, 0.0)
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KszCell {
    pub size: usize,
    pub replicate: usize,
    pub seed: u64,
    pub norm: f64,
    pub converged: bool,
    /// Mixed (bilinear) or plain coefficient norm of the form.
    pub measured: f64,
    /// `N^{1/inner + 1/outer}` (bilinear) or `N^{m/outer}`.
    pub closed_form: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SharpnessReport {
    pub sizes: Vec<usize>,
    /// Median norm estimate per size.
    pub observed: Vec<f64>,
    pub slope: f64,
    pub intercept: f64,
    pub residual: f64,
    /// Smallest outer exponent compatible with the observed growth.
    #[serde(with = "crate::serde_ext")]
    pub implied_bound: f64,
    /// The same bound computed from the theoretical growth exponent.
    #[serde(with = "crate::serde_ext")]
    pub theoretical_target: f64,
    pub theoretical_slope: f64,
    pub cells: Vec<KszCell>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SharpnessOptions {
    pub seeds_per_size: usize,
    pub restarts: usize,
    pub execution: Execution,
}

impl Default for SharpnessOptions {
    fn default() -> Self {
        Self {
            seeds_per_size: Tolerances::DEFAULT.monte_carlo_seeds,
            restarts: Tolerances::DEFAULT.default_restarts,
            execution: Execution::default(),
        }
    }
}

/// Outer exponent `s` solving `growth(LHS) = slope`.
fn implied_outer(m: usize, inner: f64, slope: f64) -> f64 {
    let rate = if m == 2 { slope - 1.0 / inner } else { slope / m as f64 };
    if rate > 0.0 {
        1.0 / rate
    } else {
        f64::INFINITY
    }
}

/// Norm growth of random-sign forms against the growth of their coefficient norm.
///
/// For every size, `seeds_per_size` forms are drawn with per-cell seeds and
/// their norms estimated; the median per size is fitted on a log-log scale.
/// For a bilinear form with `±1` entries the mixed norm `ℓ_s(ℓ_r)` equals
/// `N^{1/r + 1/s}`, so `LHS ≤ C‖A‖` forces `1/r + 1/s ≤ slope`; the implied
/// bound is the `s` where equality holds. Other arities use the plain
/// coefficient norm `N^{m/s}`.
pub fn sharpness_experiment(
    m: usize,
    balls: &BallSpec,
    pair: ExponentPair,
    sizes: &[usize],
    seed: u64,
    opts: &SharpnessOptions,
) -> Result<SharpnessReport> {
    if balls.len() != m {
        return Err(Error::ArityMismatch { expected: m, found: balls.len() });
    }
    if sizes.len() < 3 || sizes.windows(2).any(|w| w[0] >= w[1]) || sizes[0] == 0 {
        return Err(Error::InvalidArgument("need at least 3 strictly increasing positive sizes".into()));
    }
    if opts.seeds_per_size == 0 {
        return Err(Error::InvalidArgument("seeds_per_size must be at least 1".into()));
    }
    let theoretical_slope = ksz_exponent(m, balls.p_values())?;
    let grid: Vec<(usize, usize)> = sizes
        .iter()
        .flat_map(|&n| (0..opts.seeds_per_size).map(move |r| (n, r)))
        .collect();
    let cells = opts.execution.map_slice(&grid, |&(n, r)| -> Result<KszCell> {
        let s = cell_seed(seed, &format!("N={n},rep={r}"));
        let a = ksz_random_form(m, n, s)?;
        let alt = AlternatingOptions { restarts: opts.restarts, seed: s, execution: opts.execution, tolerances: Tolerances::DEFAULT };
        let est = form_norm_lower_with(&a, balls, &alt)?;
        let nf = n as f64;
        let (measured, closed_form) = if m == 2 {
            (mixed_norm_bilinear(&a, pair.inner, pair.outer)?, nf.powf(1.0 / pair.inner + 1.0 / pair.outer))
        } else {
            (coeff_norm(&a, pair.outer)?, nf.powf(m as f64 / pair.outer))
        };
        Ok(KszCell { size: n, replicate: r, seed: s, norm: est.value, converged: est.converged, measured, closed_form })
    });
    let cells: Vec<KszCell> = cells.into_iter().collect::<Result<_>>()?;
    let observed: Vec<f64> = sizes
        .iter()
        .map(|&n| median(cells.iter().filter(|c| c.size == n).map(|c| c.norm).collect()))
        .collect();
    let fit = fit_growth(&sizes.iter().map(|&n| n as f64).collect::<Vec<_>>(), &observed)?;
    Ok(SharpnessReport {
        sizes: sizes.to_vec(),
        observed,
        slope: fit.slope,
        intercept: fit.intercept,
        residual: fit.residual,
        implied_bound: implied_outer(m, pair.inner, fit.slope),
        theoretical_target: implied_outer(m, pair.inner, theoretical_slope),
        theoretical_slope,
        cells,
    })
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(|a, b| a.total_cmp(b));
    let k = v.len();
    if k % 2 == 1 {
        v[k / 2]
    } else {
        0.5 * (v[k / 2 - 1] + v[k / 2])
    }
}
