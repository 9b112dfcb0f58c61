//! Sup norms over `ℓ_p` unit balls.
//!
//! Lower bounds come from optimizers that return the maximizing point, so
//! every reported value can be re-derived by evaluating at the witness.
//! Upper bounds come from iterated Hölder estimates on the coefficients.

mod alternating;
mod bounds;
mod dual;
mod gradient;

pub use alternating::{alternating_ascent, form_norm_lower, form_norm_lower_with, AlternatingOptions, AscentRun};
pub use bounds::{form_norm_upper, poly_norm_bracket, PolyNormBracket};
pub use dual::{dual_exponent, normalize_to_sphere, norming_vector, vector_norm};
pub use gradient::{poly_norm_lower, poly_norm_lower_with, GradientOptions};

use crate::algebra::ScalarRepr;
use crate::{Error, Result, Scalar};
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

/// One `ℓ_p` exponent per argument slot; a polynomial uses a single value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BallSpec {
    #[serde(with = "crate::serde_ext::vec")]
    p_values: Vec<f64>,
}

impl BallSpec {
    pub fn new(p_values: Vec<f64>) -> Result<Self> {
        for &p in &p_values {
            if p.is_nan() || p < 1.0 {
                return Err(Error::InvalidExponent(p));
            }
        }
        Ok(Self { p_values })
    }

    /// `(p, …, p)` with `m` slots.
    pub fn uniform(p: f64, m: usize) -> Result<Self> {
        Self::new(vec![p; m])
    }

    pub fn p_values(&self) -> &[f64] {
        &self.p_values
    }

    pub fn len(&self) -> usize {
        self.p_values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p_values.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Method {
    Alternating {
        restarts: usize,
        seed: u64,
        rel_change: f64,
        max_sweeps: usize,
    },
    ProjectedGradient {
        restarts: usize,
        seed: u64,
        initial_step: f64,
        min_step: f64,
        max_iterations: usize,
    },
}

impl Method {
    pub fn label(&self) -> &'static str {
        match self {
            Method::Alternating { .. } => "alternating",
            Method::ProjectedGradient { .. } => "projected-gradient",
        }
    }
}

/// A certified lower bound on a sup norm.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormEstimate {
    pub value: f64,
    /// One point per slot (a single point for polynomials), each on its unit sphere.
    #[serde(with = "witness_serde")]
    pub witness: Vec<Vec<Scalar>>,
    pub restarts_used: usize,
    /// Iterations (sweeps or gradient steps) of the winning restart.
    pub iterations: usize,
    pub converged: bool,
    pub method: Method,
}

mod witness_serde {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(w: &[Vec<Scalar>], s: S) -> std::result::Result<S::Ok, S::Error> {
        let repr: Vec<Vec<ScalarRepr>> = w
            .iter()
            .map(|v| v.iter().map(|c| ScalarRepr { re: c.re, im: c.im }).collect())
            .collect();
        repr.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<Scalar>>, D::Error> {
        let repr = Vec::<Vec<ScalarRepr>>::deserialize(d)?;
        Ok(repr
            .into_iter()
            .map(|v| v.into_iter().map(|c| Scalar::new(c.re, c.im)).collect())
            .collect())
    }
}

/// Symmetric random start normalized to the unit `ℓ_p` sphere.
pub(crate) fn random_sphere_point<R: Rng>(rng: &mut R, n: usize, p: f64, complex: bool) -> Vec<Scalar> {
    loop {
        let x: Vec<Scalar> = (0..n)
            .map(|_| {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = if complex { rng.sample(StandardNormal) } else { 0.0 };
                Scalar::new(re, im)
            })
            .collect();
        if let Some(y) = normalize_to_sphere(&x, p) {
            return y;
        }
    }
}

/// Index of the best value; ties go to the lowest index.
pub(crate) fn best_index(values: impl IntoIterator<Item = f64>) -> Option<usize> {
    let mut best: Option<(usize, f64)> = None;
    for (i, v) in values.into_iter().enumerate() {
        match best {
            Some((_, b)) if !(v > b) => {}
            _ => best = Some((i, v)),
        }
    }
    best.map(|(i, _)| i)
}
