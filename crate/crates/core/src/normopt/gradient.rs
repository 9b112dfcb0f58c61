use super::{best_index, normalize_to_sphere, random_sphere_point, vector_norm, Method, NormEstimate};
use crate::algebra::{HomogeneousPolynomial, ScalarField};
use crate::{Error, Execution, Result, Scalar, Tolerances};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GradientOptions {
    pub restarts: usize,
    pub seed: u64,
    pub execution: Execution,
    pub tolerances: Tolerances,
}

impl Default for GradientOptions {
    fn default() -> Self {
        Self {
            restarts: Tolerances::DEFAULT.default_restarts,
            seed: 0,
            execution: Execution::default(),
            tolerances: Tolerances::DEFAULT,
        }
    }
}

struct GradientRun {
    point: Vec<Scalar>,
    value: f64,
    iterations: usize,
    converged: bool,
}

/// Lower bound on `sup_{‖z‖_p ≤ 1} |P(z)|` with default options.
pub fn poly_norm_lower(p: &HomogeneousPolynomial, exponent: f64, restarts: usize, seed: u64) -> Result<NormEstimate> {
    poly_norm_lower_with(p, exponent, &GradientOptions { restarts, seed, ..Default::default() })
}

/// Multi-start projected gradient ascent on the `ℓ_p` sphere.
///
/// Ascends `log|P|` (scale invariant in the coefficients) and projects back
/// by rescaling, which is exact because `P` is homogeneous. Complex
/// polynomials are optimized over the `2n` real coordinates.
pub fn poly_norm_lower_with(p: &HomogeneousPolynomial, exponent: f64, opts: &GradientOptions) -> Result<NormEstimate> {
    if exponent.is_nan() || exponent < 1.0 {
        return Err(Error::InvalidExponent(exponent));
    }
    if opts.restarts == 0 {
        return Err(Error::InvalidArgument("restarts must be at least 1".into()));
    }
    let complex = p.field() == ScalarField::Complex;
    let runs = opts.execution.map_indexed(opts.restarts, |i| {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(i as u64));
        let start = random_sphere_point(&mut rng, p.n(), exponent, complex);
        ascend(p, exponent, start, complex, &opts.tolerances)
    });
    let best = best_index(runs.iter().map(|r| r.value)).expect("restarts >= 1");
    let run = runs.into_iter().nth(best).expect("index in range");
    Ok(NormEstimate {
        value: run.value,
        witness: vec![run.point],
        restarts_used: opts.restarts,
        iterations: run.iterations,
        converged: run.converged,
        method: Method::ProjectedGradient {
            restarts: opts.restarts,
            seed: opts.seed,
            initial_step: opts.tolerances.gradient_initial_step,
            min_step: opts.tolerances.gradient_min_step,
            max_iterations: opts.tolerances.gradient_max_iterations,
        },
    })
}

fn ascend(p: &HomogeneousPolynomial, exponent: f64, start: Vec<Scalar>, complex: bool, tol: &Tolerances) -> GradientRun {
    let mut x = start;
    let (mut v, mut g) = p.eval_with_gradient(&x).expect("dimension matches");
    let mut f = v.norm();
    let mut step = tol.gradient_initial_step;
    let mut iterations = 0;
    while f > 0.0 && iterations < tol.gradient_max_iterations && step >= tol.gradient_min_step {
        iterations += 1;
        // ∇ log|P| packed as u + iv: conj(conj(P) ∂P) / |P|²
        let scale = 1.0 / (f * f);
        let candidate: Vec<Scalar> = x
            .iter()
            .zip(&g)
            .map(|(xj, gj)| {
                let mut d = (v.conj() * gj).conj() * scale;
                if !complex {
                    d.im = 0.0;
                }
                xj + d * step
            })
            .collect();
        let Some(y) = normalize_to_sphere(&candidate, exponent) else {
            step *= 0.5;
            continue;
        };
        let (vy, gy) = p.eval_with_gradient(&y).expect("dimension matches");
        if vy.norm() > f {
            x = y;
            v = vy;
            g = gy;
            f = v.norm();
        } else {
            step *= 0.5;
        }
    }
    let converged = f == 0.0 || step < tol.gradient_min_step;
    let denom = vector_norm(&x, exponent).powi(p.degree() as i32);
    let value = if denom > 0.0 { p.eval(&x).expect("dimension matches").norm() / denom } else { 0.0 };
    GradientRun { point: x, value, iterations, converged }
}
