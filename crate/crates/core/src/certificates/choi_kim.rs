use crate::algebra::{coeff_norm, HomogeneousPolynomial};
use crate::normopt::{poly_norm_lower_with, GradientOptions};
use crate::{Error, Execution, Result, Tolerances};
use serde::{Deserialize, Serialize};

/// `P(x, y) = a x² − a y² + c xy` with `a = sign·√(4 − c²)/2`.
///
/// These are the norm-one extreme points of the unit ball of 2-homogeneous
/// real polynomials on `ℓ_2^2` with `a = −b`.
pub fn choi_kim_family(c: f64, sign: f64) -> Result<HomogeneousPolynomial> {
    if !(c.abs() <= 2.0) {
        return Err(Error::InvalidArgument(format!("need |c| <= 2, got {c}")));
    }
    if sign != 1.0 && sign != -1.0 {
        return Err(Error::InvalidArgument(format!("sign must be ±1, got {sign}")));
    }
    let a = sign * (4.0 - c * c).max(0.0).sqrt() / 2.0;
    HomogeneousPolynomial::real(2, 2, &[(&[2, 0], a), (&[1, 1], c), (&[0, 2], -a)])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChoiKimCase {
    /// `±x² ± y²`.
    Diagonal,
    /// `a = −b`, `4a² = 4 − c²`.
    Family,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChoiKimRow {
    pub case: ChoiKimCase,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub norm: f64,
    pub max_coefficient: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChoiKimScan {
    pub rows: Vec<ChoiKimRow>,
    pub max_ratio: f64,
    /// `c` of the first row attaining `max_ratio`.
    pub argmax_c: f64,
    /// `max |norm − 1|` over the scan.
    pub max_norm_deviation: f64,
}

/// Evaluates `max{|a|,|b|,|c|} / ‖P‖` on all extreme points of the scan grid.
///
/// The family is sampled at `c = −2 + 4k/K` with `K = round(4/step)`, both
/// signs, followed by the four diagonal extreme points `±x² ± y²`.
pub fn choi_kim_scan(step: f64, restarts: usize, seed: u64, execution: Execution) -> Result<ChoiKimScan> {
    if !(step > 0.0 && step <= 4.0) {
        return Err(Error::InvalidArgument(format!("scan step must lie in (0, 4], got {step}")));
    }
    let k_max = (4.0 / step).round() as usize;
    let mut polys = Vec::with_capacity(2 * (k_max + 1) + 4);
    for k in 0..=k_max {
        let c = -2.0 + 4.0 * k as f64 / k_max as f64;
        for sign in [1.0, -1.0] {
            polys.push((ChoiKimCase::Family, choi_kim_family(c, sign)?));
        }
    }
    for (a, b) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
        polys.push((ChoiKimCase::Diagonal, HomogeneousPolynomial::real(2, 2, &[(&[2, 0], a), (&[0, 2], b)])?));
    }
    let opts = GradientOptions { restarts, seed, execution, tolerances: Tolerances::DEFAULT };
    let rows = execution.map_slice(&polys, |(case, poly)| -> Result<ChoiKimRow> {
        let norm = poly_norm_lower_with(poly, 2.0, &opts)?.value;
        let max_coefficient = coeff_norm(poly, f64::INFINITY)?;
        let coef = |e: [u32; 2]| poly.coefficient(&crate::MultiIndex::new(e.to_vec())).re;
        Ok(ChoiKimRow {
            case: *case,
            a: coef([2, 0]),
            b: coef([0, 2]),
            c: coef([1, 1]),
            norm,
            max_coefficient,
            ratio: max_coefficient / norm,
        })
    });
    let rows: Vec<ChoiKimRow> = rows.into_iter().collect::<Result<_>>()?;
    let best = crate::normopt::best_index(rows.iter().map(|r| r.ratio)).expect("non-empty scan");
    Ok(ChoiKimScan {
        max_ratio: rows[best].ratio,
        argmax_c: rows[best].c,
        max_norm_deviation: rows.iter().map(|r| (r.norm - 1.0).abs()).fold(0.0, f64::max),
        rows,
    })
}
