use super::{best_index, normalize_to_sphere, norming_vector, random_sphere_point, vector_norm, BallSpec, Method, NormEstimate};
use crate::algebra::{MultilinearForm, ScalarField};
use crate::{Error, Execution, Result, Scalar, Tolerances};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlternatingOptions {
    pub restarts: usize,
    pub seed: u64,
    pub execution: Execution,
    pub tolerances: Tolerances,
}

impl Default for AlternatingOptions {
    fn default() -> Self {
        Self {
            restarts: Tolerances::DEFAULT.default_restarts,
            seed: 0,
            execution: Execution::default(),
            tolerances: Tolerances::DEFAULT,
        }
    }
}

/// Outcome of one alternating-maximization restart.
#[derive(Debug, Clone)]
pub struct AscentRun {
    pub points: Vec<Vec<Scalar>>,
    /// `|T(x_1,…,x_m)|` at the start and after every single-slot update.
    pub trace: Vec<f64>,
    pub sweeps: usize,
    pub converged: bool,
}

/// Alternating maximization from the given starting points (projected onto their unit spheres).
///
/// Each slot update replaces `x_k` by the norming vector of
/// `T(x_1,…,·,…,x_m)`, which is the exact maximizer in that slot, so the
/// trace is non-decreasing.
pub fn alternating_ascent(
    t: &MultilinearForm,
    balls: &BallSpec,
    init: Vec<Vec<Scalar>>,
    tol: &Tolerances,
) -> Result<AscentRun> {
    check_arity(t, balls)?;
    if init.len() != t.arity() {
        return Err(Error::ArityMismatch { expected: t.arity(), found: init.len() });
    }
    let mut points = init
        .iter()
        .zip(balls.p_values())
        .map(|(x, &p)| normalize_to_sphere(x, p).ok_or(Error::ZeroVector))
        .collect::<Result<Vec<_>>>()?;
    let eval = |pts: &[Vec<Scalar>]| {
        let r: Vec<&[Scalar]> = pts.iter().map(|v| v.as_slice()).collect();
        t.eval(&r)
    };
    let mut current = eval(&points)?.norm();
    let mut trace = vec![current];
    let mut sweeps = 0;
    let mut converged = false;
    while sweeps < tol.alternating_max_sweeps {
        sweeps += 1;
        let before = current;
        for k in 0..t.arity() {
            let phi = {
                let r: Vec<&[Scalar]> = points.iter().map(|v| v.as_slice()).collect();
                t.contract_unchecked(k, &r)
            };
            match norming_vector(&phi, balls.p_values()[k]) {
                Ok((x, value)) => {
                    points[k] = x;
                    current = value;
                }
                // the functional vanishes: every choice of x_k is optimal
                Err(Error::ZeroVector) => current = 0.0,
                Err(e) => return Err(e),
            }
            trace.push(current);
        }
        if current - before <= tol.alternating_rel_change * current {
            converged = true;
            break;
        }
    }
    Ok(AscentRun { points, trace, sweeps, converged })
}

fn check_arity(t: &MultilinearForm, balls: &BallSpec) -> Result<()> {
    if balls.len() != t.arity() {
        return Err(Error::ArityMismatch { expected: t.arity(), found: balls.len() });
    }
    Ok(())
}

/// Lower bound on `‖T‖` over `B_{ℓ_{p_1}} × ⋯ × B_{ℓ_{p_m}}` with default options.
pub fn form_norm_lower(t: &MultilinearForm, balls: &BallSpec, restarts: usize, seed: u64) -> Result<NormEstimate> {
    form_norm_lower_with(t, balls, &AlternatingOptions { restarts, seed, ..Default::default() })
}

/// Multi-start alternating maximization; restart `i` is seeded with `seed + i`.
pub fn form_norm_lower_with(t: &MultilinearForm, balls: &BallSpec, opts: &AlternatingOptions) -> Result<NormEstimate> {
    check_arity(t, balls)?;
    if opts.restarts == 0 {
        return Err(Error::InvalidArgument("restarts must be at least 1".into()));
    }
    let complex = t.field() == ScalarField::Complex;
    let runs = opts.execution.map_indexed(opts.restarts, |i| {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(i as u64));
        let init = balls
            .p_values()
            .iter()
            .map(|&p| random_sphere_point(&mut rng, t.n(), p, complex))
            .collect();
        let run = alternating_ascent(t, balls, init, &opts.tolerances)?;
        let value = certified_value(t, balls, &run.points);
        Ok::<_, Error>((value, run))
    });
    let runs: Vec<(f64, AscentRun)> = runs.into_iter().collect::<Result<_>>()?;
    let best = best_index(runs.iter().map(|(v, _)| *v)).expect("restarts >= 1");
    let (value, run) = runs.into_iter().nth(best).expect("index in range");
    Ok(NormEstimate {
        value,
        witness: run.points,
        restarts_used: opts.restarts,
        iterations: run.sweeps,
        converged: run.converged,
        method: Method::Alternating {
            restarts: opts.restarts,
            seed: opts.seed,
            rel_change: opts.tolerances.alternating_rel_change,
            max_sweeps: opts.tolerances.alternating_max_sweeps,
        },
    })
}

/// `|T(x_1,…,x_m)| / Π ‖x_i‖_{p_i}`.
pub(crate) fn certified_value(t: &MultilinearForm, balls: &BallSpec, points: &[Vec<Scalar>]) -> f64 {
    let r: Vec<&[Scalar]> = points.iter().map(|v| v.as_slice()).collect();
    let denom: f64 = points
        .iter()
        .zip(balls.p_values())
        .map(|(x, &p)| vector_norm(x, p))
        .product();
    if denom == 0.0 {
        return 0.0;
    }
    t.eval_unchecked(&r).norm() / denom
}
