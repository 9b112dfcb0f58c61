use crate::algebra::{mixed_norm_bilinear, MultilinearForm};
use crate::{Error, Result, Tolerances};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InterchangeCheck {
    /// `(Σ_k (Σ_j |A_{jk}|²)^{λ/2})^{1/λ}`: λ outermost.
    pub lhs: f64,
    /// `(Σ_j (Σ_k |A_{jk}|^λ)^{2/λ})^{1/2}`: same index/exponent pairing, nesting swapped.
    pub rhs: f64,
    pub holds: bool,
}

/// Minkowski's inequality for `λ ≤ 2`: moving the smaller exponent outside can only increase the norm.
pub fn minkowski_interchange_check(a: &MultilinearForm, lambda: f64) -> Result<InterchangeCheck> {
    if !(lambda > 0.0 && lambda <= 2.0) {
        return Err(Error::Regime(format!("interchange needs 0 < λ <= 2, got {lambda}")));
    }
    let lhs = mixed_norm_bilinear(a, 2.0, lambda)?;
    let rhs = mixed_norm_bilinear(&a.transpose()?, lambda, 2.0)?;
    Ok(InterchangeCheck { lhs, rhs, holds: lhs >= rhs - Tolerances::DEFAULT.interchange })
}
