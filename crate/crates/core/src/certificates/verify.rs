use crate::algebra::{coeff_norm, MultilinearForm, ScalarField};
use crate::exec::cell_seed;
use crate::normopt::{form_norm_lower_with, form_norm_upper, AlternatingOptions, BallSpec};
use crate::theory::{multilinear_base_constant, multilinear_exponent};
use crate::{Execution, Result, Scalar, Tolerances};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub restarts: usize,
    pub execution: Execution,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { restarts: Tolerances::DEFAULT.default_restarts, execution: Execution::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyRow {
    pub index: usize,
    pub seed: u64,
    pub lhs: f64,
    pub norm_lower: f64,
    pub norm_upper: f64,
    /// `lhs ≤ C · norm_lower`: holds for the true norm as well.
    pub verified: bool,
    /// `lhs > C · norm_upper`: would contradict the inequality.
    pub violation: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub m: usize,
    pub n: usize,
    pub p: f64,
    #[serde(with = "crate::serde_ext")]
    pub exponent: f64,
    pub constant: f64,
    pub rows: Vec<VerifyRow>,
    pub verified: usize,
    pub violations: usize,
}

/// Checks the real multilinear inequality `‖coeffs‖_r ≤ (√2)^{m−1} ‖T‖` on
/// `count` Gaussian random forms on `ℓ_p^n`, with `r` the optimal exponent.
pub fn verify_inequality(m: usize, n: usize, p: f64, count: usize, seed: u64, opts: &VerifyOptions) -> Result<VerifyReport> {
    let exponent = multilinear_exponent(m, p)?;
    let constant = multilinear_base_constant(m, ScalarField::Real);
    let balls = BallSpec::uniform(p, m)?;
    let rows = opts.execution.map_indexed(count, |i| -> Result<VerifyRow> {
        let s = cell_seed(seed, &format!("form={i}"));
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let t = MultilinearForm::from_fn(n, m, ScalarField::Real, |_| {
            Scalar::new(StandardNormal.sample(&mut rng), 0.0)
        })?;
        let lhs = coeff_norm(&t, exponent)?;
        let alt = AlternatingOptions { restarts: opts.restarts, seed: s, execution: opts.execution, tolerances: Tolerances::DEFAULT };
        let lower = form_norm_lower_with(&t, &balls, &alt)?.value;
        let upper = form_norm_upper(&t, &balls)?;
        Ok(VerifyRow {
            index: i,
            seed: s,
            lhs,
            norm_lower: lower,
            norm_upper: upper,
            verified: lhs <= constant * lower,
            violation: lhs > constant * upper,
        })
    });
    let rows: Vec<VerifyRow> = rows.into_iter().collect::<Result<_>>()?;
    Ok(VerifyReport {
        m,
        n,
        p,
        exponent,
        constant,
        verified: rows.iter().filter(|r| r.verified).count(),
        violations: rows.iter().filter(|r| r.violation).count(),
        rows,
    })
}
