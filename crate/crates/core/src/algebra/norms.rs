use super::{HomogeneousPolynomial, MultilinearForm};
use crate::{Error, Result};

/// `ℓ_r` norm of a list of absolute values; `r = ∞` gives the maximum.
///
/// Values are rescaled by their maximum before powering.
pub fn lp_norm<I>(abs_values: I, r: f64) -> f64
where
    I: IntoIterator<Item = f64>,
{
    let vals: Vec<f64> = abs_values.into_iter().collect();
    let max = vals.iter().copied().fold(0.0, f64::max);
    if r == f64::INFINITY || max == 0.0 {
        return max;
    }
    let s: f64 = vals.iter().map(|v| (v / max).powf(r)).sum();
    max * s.powf(1.0 / r)
}

pub(crate) fn check_exponent(r: f64) -> Result<()> {
    if r.is_nan() || r <= 0.0 {
        return Err(Error::InvalidExponent(r));
    }
    Ok(())
}

/// Objects whose coefficient multiset has an `ℓ_r` norm.
pub trait CoefficientNorm {
    fn coefficient_moduli(&self) -> Vec<f64>;
}

impl CoefficientNorm for HomogeneousPolynomial {
    /// Runs over multi-indices `|α| = m`.
    fn coefficient_moduli(&self) -> Vec<f64> {
        self.coeffs().values().map(|c| c.norm()).collect()
    }
}

impl CoefficientNorm for MultilinearForm {
    /// Runs over all `n^m` index tuples.
    fn coefficient_moduli(&self) -> Vec<f64> {
        self.entries().iter().map(|c| c.norm()).collect()
    }
}

pub fn coeff_norm<T: CoefficientNorm + ?Sized>(object: &T, r: f64) -> Result<f64> {
    check_exponent(r)?;
    Ok(lp_norm(object.coefficient_moduli(), r))
}

/// `(Σ_k (Σ_j |A_{jk}|^{inner})^{outer/inner})^{1/outer}`.
///
/// The inner norm always runs over the first index `j`.
pub fn mixed_norm_bilinear(a: &MultilinearForm, inner: f64, outer: f64) -> Result<f64> {
    if a.arity() != 2 {
        return Err(Error::NotBilinear(a.arity()));
    }
    check_exponent(inner)?;
    check_exponent(outer)?;
    let n = a.n();
    let columns = (0..n).map(|k| lp_norm((0..n).map(|j| a.entry(&[j, k]).norm()), inner));
    Ok(lp_norm(columns, outer))
}
