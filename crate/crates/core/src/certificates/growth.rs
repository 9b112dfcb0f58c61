use crate::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GrowthFit {
    pub slope: f64,
    pub intercept: f64,
    /// Largest absolute residual in log space.
    pub residual: f64,
}

/// Ordinary least squares of `log(value)` against `log(size)`.
pub fn fit_growth(sizes: &[f64], values: &[f64]) -> Result<GrowthFit> {
    if sizes.len() != values.len() {
        return Err(Error::DimensionMismatch { expected: sizes.len(), found: values.len() });
    }
    if sizes.len() < 3 {
        return Err(Error::InvalidArgument("need at least 3 points for a growth fit".into()));
    }
    if sizes.iter().chain(values).any(|&v| !(v > 0.0) || !v.is_finite()) {
        return Err(Error::InvalidArgument("growth fit needs positive finite data".into()));
    }
    let xs: Vec<f64> = sizes.iter().map(|v| v.ln()).collect();
    let ys: Vec<f64> = values.iter().map(|v| v.ln()).collect();
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidArgument("growth fit needs distinct sizes".into()));
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residual = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - intercept - slope * x).abs())
        .fold(0.0, f64::max);
    Ok(GrowthFit { slope, intercept, residual })
}
