use crate::algebra::{coeff_norm, HomogeneousPolynomial, MultilinearForm, ScalarField};
use crate::normopt::{
    form_norm_lower_with, poly_norm_lower_with, AlternatingOptions, BallSpec, GradientOptions, NormEstimate,
};
use crate::{Error, Execution, Result, Scalar, Tolerances};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy)]
pub enum RatioObject<'a> {
    Polynomial(&'a HomogeneousPolynomial),
    Form(&'a MultilinearForm),
}

/// `coeff_norm / norm_lower`.
///
/// The denominator is a lower bound on the sup norm, so the ratio
/// over-estimates the true one whenever the optimizer misses the maximum;
/// `denominator.converged` records whether it stopped cleanly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioEstimate {
    pub ratio: f64,
    pub numerator: f64,
    pub denominator: NormEstimate,
}

/// Ratio with the default optimizer settings (32 restarts, seed 0).
pub fn ratio(object: RatioObject<'_>, balls: &BallSpec, exponent: f64) -> Result<RatioEstimate> {
    ratio_with(object, balls, exponent, Tolerances::DEFAULT.default_restarts, 0, Execution::default())
}

pub fn ratio_with(
    object: RatioObject<'_>,
    balls: &BallSpec,
    exponent: f64,
    restarts: usize,
    seed: u64,
    execution: Execution,
) -> Result<RatioEstimate> {
    let (numerator, denominator) = match object {
        RatioObject::Polynomial(p) => {
            if balls.len() != 1 {
                return Err(Error::ArityMismatch { expected: 1, found: balls.len() });
            }
            if p.is_zero() {
                return Err(Error::ZeroObject);
            }
            let opts = GradientOptions { restarts, seed, execution, tolerances: Tolerances::DEFAULT };
            (coeff_norm(p, exponent)?, poly_norm_lower_with(p, balls.p_values()[0], &opts)?)
        }
        RatioObject::Form(t) => {
            let opts = AlternatingOptions { restarts, seed, execution, tolerances: Tolerances::DEFAULT };
            (coeff_norm(t, exponent)?, form_norm_lower_with(t, balls, &opts)?)
        }
    };
    if !(denominator.value > 0.0) {
        return Err(Error::ZeroObject);
    }
    Ok(RatioEstimate { ratio: numerator / denominator.value, numerator, denominator })
}

/// Shorthand for a polynomial on a single `ℓ_p` ball.
pub fn poly_ratio(p: &HomogeneousPolynomial, ball: f64, exponent: f64) -> Result<RatioEstimate> {
    ratio(RatioObject::Polynomial(p), &BallSpec::new(vec![ball])?, exponent)
}

/// Ratios along `p_1 > p_2 > … ↓ m`, all inside `(m, 2m)`.
pub fn limit_trace_p_to_m(p: &HomogeneousPolynomial, p_sequence: &[f64], exponent: f64) -> Result<Vec<f64>> {
    check_limit_sequence(p.degree(), p_sequence)?;
    p_sequence
        .iter()
        .map(|&pi| poly_ratio(p, pi, exponent).map(|r| r.ratio))
        .collect()
}

/// Every `p_i` lies in `(m, 2m)` and the sequence strictly decreases.
pub fn check_limit_sequence(m: usize, p_sequence: &[f64]) -> Result<()> {
    let m = m as f64;
    for (i, &pi) in p_sequence.iter().enumerate() {
        if !(pi > m && pi < 2.0 * m) {
            return Err(Error::Regime(format!("p = {pi} is outside ({m}, {})", 2.0 * m)));
        }
        if i > 0 && !(pi < p_sequence[i - 1]) {
            return Err(Error::InvalidArgument("p sequence must be strictly decreasing".into()));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioSearchResult {
    /// Equals `poly_ratio(best_object, p, exponent).ratio`.
    pub best_ratio: f64,
    pub best_object: HomogeneousPolynomial,
    pub evaluations: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchOptions {
    /// Share of the budget spent on random samples before polishing.
    pub random_fraction: f64,
    pub initial_step: f64,
    pub min_step: f64,
    pub execution: Execution,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { random_fraction: 0.5, initial_step: 0.25, min_step: 1e-9, execution: Execution::default() }
    }
}

pub fn search_constant_lower(
    m: usize,
    n: usize,
    p: f64,
    field: ScalarField,
    exponent: f64,
    budget: usize,
    seed: u64,
) -> Result<RatioSearchResult> {
    search_constant_lower_with(m, n, p, field, exponent, budget, seed, &SearchOptions::default())
}

/// Maximizes `coeff_norm(P, exponent) / ‖P‖_p` over `m`-homogeneous `P` on `K^n`.
///
/// Coefficient vectors are kept on the unit Euclidean sphere (the ratio is
/// scale invariant). Seeded random samples are followed by a pattern search
/// that tries `±h` along every real coordinate, moves to the best improving
/// neighbour and halves `h` when none improves. Every evaluation counts
/// against `budget`.
#[allow(clippy::too_many_arguments)]
pub fn search_constant_lower_with(
    m: usize,
    n: usize,
    p: f64,
    field: ScalarField,
    exponent: f64,
    budget: usize,
    seed: u64,
    opts: &SearchOptions,
) -> Result<RatioSearchResult> {
    if budget == 0 {
        return Err(Error::InvalidArgument("budget must be at least 1".into()));
    }
    let ball = BallSpec::new(vec![p])?;
    let d = crate::algebra::enumerate_multi_indices(n, m)?.len();
    let complex = field == ScalarField::Complex;
    let dim = if complex { 2 * d } else { d };
    let to_poly = |v: &[f64]| -> Result<HomogeneousPolynomial> {
        let dense: Vec<Scalar> = (0..d)
            .map(|i| if complex { Scalar::new(v[2 * i], v[2 * i + 1]) } else { Scalar::new(v[i], 0.0) })
            .collect();
        HomogeneousPolynomial::from_dense(n, m, field, &dense)
    };
    let evaluate = |v: &[f64]| -> f64 {
        match to_poly(v).and_then(|poly| ratio(RatioObject::Polynomial(&poly), &ball, exponent)) {
            Ok(r) => r.ratio,
            Err(_) => f64::NEG_INFINITY,
        }
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n_random = ((budget as f64 * opts.random_fraction) as usize).clamp(1, budget);
    let samples: Vec<Vec<f64>> = (0..n_random)
        .map(|_| loop {
            let v: Vec<f64> = (0..dim).map(|_| StandardNormal.sample(&mut rng)).collect();
            if let Some(u) = unit(&v) {
                break u;
            }
        })
        .collect();
    let values = opts.execution.map_slice(&samples, |v| evaluate(v));
    let mut evaluations = n_random;
    let best_i = crate::normopt::best_index(values.iter().copied()).expect("n_random >= 1");
    let mut best = samples[best_i].clone();
    let mut best_value = values[best_i];

    let mut step = opts.initial_step;
    while step >= opts.min_step && evaluations + 2 * dim <= budget {
        let neighbours: Vec<Vec<f64>> = (0..2 * dim)
            .filter_map(|k| {
                let mut v = best.clone();
                v[k / 2] += if k % 2 == 0 { step } else { -step };
                unit(&v)
            })
            .collect();
        let vals = opts.execution.map_slice(&neighbours, |v| evaluate(v));
        evaluations += neighbours.len();
        match crate::normopt::best_index(vals.iter().copied()) {
            Some(k) if vals[k] > best_value => {
                best = neighbours[k].clone();
                best_value = vals[k];
            }
            _ => step *= 0.5,
        }
    }

    let best_object = to_poly(&best)?;
    let best_ratio = poly_ratio(&best_object, p, exponent)?.ratio;
    Ok(RatioSearchResult { best_ratio, best_object, evaluations, seed })
}

fn unit(v: &[f64]) -> Option<Vec<f64>> {
    let nrm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    (nrm > 0.0 && nrm.is_finite()).then(|| v.iter().map(|x| x / nrm).collect())
}
