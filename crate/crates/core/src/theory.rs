//! Closed-form exponents, regimes and constant bounds.
//!
//! `∞` is an ordinary `f64::INFINITY` throughout, with `1/∞ = 0`.

use crate::algebra::ScalarField;
use crate::serde_ext::format_extended;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// `p = m`: only the sup norm of the coefficients is bounded.
    SupNormAtPEqualsM,
    /// `m < p < 2m`.
    Subquadratic,
    /// `p ≥ 2m`.
    HighP,
    /// `p < m`.
    Unsupported,
}

impl Regime {
    pub fn classify(m: usize, p: f64) -> Regime {
        let mf = m as f64;
        if p.is_nan() || p < mf {
            Regime::Unsupported
        } else if p == mf {
            Regime::SupNormAtPEqualsM
        } else if p < 2.0 * mf {
            Regime::Subquadratic
        } else {
            Regime::HighP
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Regime::SupNormAtPEqualsM => "sup-norm-p-equals-m",
            Regime::Subquadratic => "subquadratic",
            Regime::HighP => "high-p",
            Regime::Unsupported => "unsupported",
        }
    }
}

/// A pair of exponents `(inner, outer)` for the iterated norm `ℓ_outer(ℓ_inner)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExponentPair {
    #[serde(with = "crate::serde_ext")]
    pub inner: f64,
    #[serde(with = "crate::serde_ext")]
    pub outer: f64,
}

impl ExponentPair {
    pub fn new(inner: f64, outer: f64) -> Result<Self> {
        for v in [inner, outer] {
            if v.is_nan() || v <= 0.0 {
                return Err(Error::InvalidExponent(v));
            }
        }
        Ok(Self { inner, outer })
    }

    pub fn swapped(self) -> Self {
        Self { inner: self.outer, outer: self.inner }
    }
}

fn check_m(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("m must be at least 2, got {m}")));
    }
    Ok(())
}

/// `2mp/(mp+p−2m)`, written in `1/p` so that `p = ∞` gives `2m/(m+1)`.
fn high_p_exponent(m: usize, p: f64) -> f64 {
    let mf = m as f64;
    let ip = 1.0 / p;
    2.0 * mf / (mf + 1.0 - 2.0 * mf * ip)
}

/// `p/(p−m)`.
fn subquadratic_exponent(m: usize, p: f64) -> f64 {
    p / (p - m as f64)
}

/// Optimal exponent of the `m`-linear Hardy–Littlewood inequality on `ℓ_p`.
pub fn multilinear_exponent(m: usize, p: f64) -> Result<f64> {
    check_m(m)?;
    match Regime::classify(m, p) {
        Regime::Unsupported => Err(Error::Unsupported { m, p }),
        Regime::SupNormAtPEqualsM => Ok(f64::INFINITY),
        Regime::Subquadratic => Ok(subquadratic_exponent(m, p)),
        Regime::HighP => Ok(high_p_exponent(m, p)),
    }
}

/// Optimal exponent of the polynomial inequality; same branches as the multilinear one.
pub fn polynomial_exponent(m: usize, p: f64) -> Result<f64> {
    multilinear_exponent(m, p)
}

/// Both branch formulas evaluated regardless of regime, for continuity checks.
pub fn branch_exponents(m: usize, p: f64) -> (f64, f64) {
    (high_p_exponent(m, p), subquadratic_exponent(m, p))
}

/// `(2, λ)` with `λ = pq/(pq−p−q)`, i.e. `1/λ = 1 − 1/p − 1/q`.
pub fn bilinear_mixed_exponents(p: f64, q: f64) -> Result<ExponentPair> {
    if !(p >= 2.0 && q >= 2.0) {
        return Err(Error::Regime(format!("need p, q >= 2, got ({p}, {q})")));
    }
    let s = 1.0 / p + 1.0 / q;
    if s >= 1.0 {
        return Err(Error::Regime(format!("need 1/p + 1/q < 1, got {s}")));
    }
    ExponentPair::new(2.0, 1.0 / (1.0 - s))
}

/// `4pq/(3pq−2p−2q)`, valid for `1/p + 1/q ≤ 1/2`.
pub fn symmetric_exponent(p: f64, q: f64) -> Result<f64> {
    let s = 1.0 / p + 1.0 / q;
    if p.is_nan() || q.is_nan() || p <= 0.0 || q <= 0.0 || s > 0.5 {
        return Err(Error::Regime(format!("need 1/p + 1/q <= 1/2, got {s}")));
    }
    Ok(4.0 / (3.0 - 2.0 * s))
}

/// Componentwise `1/out = θ/a + (1−θ)/b`.
pub fn interpolate_exponent_pairs(a: ExponentPair, b: ExponentPair, theta: f64) -> Result<ExponentPair> {
    if !(0.0..=1.0).contains(&theta) {
        return Err(Error::InvalidArgument(format!("θ must lie in [0,1], got {theta}")));
    }
    let mix = |x: f64, y: f64| 1.0 / (theta / x + (1.0 - theta) / y);
    ExponentPair::new(mix(a.inner, b.inner), mix(a.outer, b.outer))
}

/// `α(p) = 1/2 − 1/p` for `p ≥ 2`, else 0.
pub fn ksz_alpha(p: f64) -> Result<f64> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidExponent(p));
    }
    Ok(if p >= 2.0 { 0.5 - 1.0 / p } else { 0.0 })
}

/// Growth exponent `1/2 + Σ α(p_i)` of the random-sign forms.
pub fn ksz_exponent(m: usize, ps: &[f64]) -> Result<f64> {
    if ps.len() != m {
        return Err(Error::ArityMismatch { expected: m, found: ps.len() });
    }
    ps.iter().try_fold(0.5, |acc, &p| Ok(acc + ksz_alpha(p)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstantMethod {
    /// Only the multilinear base constant.
    Multilinear,
    /// Base times `(m!)^{m/p} · m^m/m!`.
    General,
    /// Base times `(m!)^{m/p} · (m^m/m!)^{|p−2|/p}`; complex, `m` a power of two.
    Harris,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Multilinear,
    LemmaFactor,
    Harris,
    PEqualsM,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConstantBound {
    pub value: f64,
    pub field: ScalarField,
    pub provenance: Provenance,
}

fn factorial(m: usize) -> f64 {
    (1..=m).map(|k| k as f64).product()
}

/// `(√2)^{m−1}` over the reals, `(2/√π)^{m−1}` over the complex numbers.
pub fn multilinear_base_constant(m: usize, field: ScalarField) -> f64 {
    let base = match field {
        ScalarField::Real => std::f64::consts::SQRT_2,
        ScalarField::Complex => 2.0 / std::f64::consts::PI.sqrt(),
    };
    base.powi(m as i32 - 1)
}

/// Upper bound on the optimal constant of the polynomial inequality.
pub fn constant_upper_bound(m: usize, p: f64, field: ScalarField, method: ConstantMethod) -> Result<ConstantBound> {
    check_m(m)?;
    let regime = Regime::classify(m, p);
    if regime == Regime::Unsupported {
        return Err(Error::Unsupported { m, p });
    }
    let base = multilinear_base_constant(m, field);
    let mf = m as f64;
    let fact = factorial(m);
    let lemma = fact.powf(mf / p);
    let polarization = mf.powi(m as i32) / fact;
    let (value, provenance) = match method {
        ConstantMethod::Multilinear => (base, Provenance::Multilinear),
        ConstantMethod::General => {
            let prov = if regime == Regime::SupNormAtPEqualsM { Provenance::PEqualsM } else { Provenance::LemmaFactor };
            (base * lemma * polarization, prov)
        }
        ConstantMethod::Harris => {
            if field != ScalarField::Complex || !m.is_power_of_two() {
                return Err(Error::InvalidArgument(
                    "Harris polarization bound needs complex scalars and m a power of 2".into(),
                ));
            }
            let harris = if p.is_infinite() { polarization } else { polarization.powf((p - 2.0).abs() / p) };
            (base * lemma * harris, Provenance::Harris)
        }
    };
    Ok(ConstantBound { value, field, provenance })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExponentRow {
    pub m: usize,
    pub p: f64,
    pub regime: Regime,
    pub multilinear_exp: Option<f64>,
    pub polynomial_exp: Option<f64>,
    pub constant_real: Option<f64>,
    pub constant_complex: Option<f64>,
}

pub fn exponent_table(ms: &[usize], ps: &[f64]) -> Result<Vec<ExponentRow>> {
    let mut rows = Vec::with_capacity(ms.len() * ps.len());
    for &m in ms {
        check_m(m)?;
        for &p in ps {
            let regime = Regime::classify(m, p);
            let constant = |field| constant_upper_bound(m, p, field, ConstantMethod::General).ok().map(|c| c.value);
            rows.push(ExponentRow {
                m,
                p,
                regime,
                multilinear_exp: multilinear_exponent(m, p).ok(),
                polynomial_exp: polynomial_exponent(m, p).ok(),
                constant_real: constant(ScalarField::Real),
                constant_complex: constant(ScalarField::Complex),
            });
        }
    }
    Ok(rows)
}

/// Writes the table as CSV with columns
/// `m,p,regime,multilinear_exp,polynomial_exp,constant_real,constant_complex`.
/// Undefined cells are left empty; infinity is written as `inf`.
pub fn write_exponent_table<W: std::io::Write>(rows: &[ExponentRow], out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["m", "p", "regime", "multilinear_exp", "polynomial_exp", "constant_real", "constant_complex"])?;
    let cell = |v: Option<f64>| v.map(format_extended).unwrap_or_default();
    for r in rows {
        w.write_record([
            r.m.to_string(),
            format_extended(r.p),
            r.regime.label().to_string(),
            cell(r.multilinear_exp),
            cell(r.polynomial_exp),
            cell(r.constant_real),
            cell(r.constant_complex),
        ])?;
    }
    w.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    const INF: f64 = f64::INFINITY;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12 * b.abs().max(1.0)
    }

    #[test]
    fn littlewood_four_thirds() {
        assert!(close(multilinear_exponent(2, INF).unwrap(), 4.0 / 3.0));
        assert!(close(multilinear_exponent(3, 4.0).unwrap(), 4.0));
        assert_eq!(multilinear_exponent(2, 2.0).unwrap(), INF);
        assert_eq!(polynomial_exponent(3, 3.0).unwrap(), INF);
    }

    #[test]
    fn boundary_agreement() {
        for m in 2..=4usize {
            let (hi, sub) = branch_exponents(m, 2.0 * m as f64);
            assert_eq!(hi, 2.0);
            assert_eq!(sub, 2.0);
            assert_eq!(multilinear_exponent(m, 2.0 * m as f64).unwrap(), 2.0);
        }
    }

    #[test]
    fn m_two_matches_classical_pair() {
        for p in [4.0, 5.0, 8.0, 100.0] {
            assert!(close(polynomial_exponent(2, p).unwrap(), 4.0 * p / (3.0 * p - 4.0)));
        }
        for p in [2.5, 3.0, 3.9] {
            assert!(close(polynomial_exponent(2, p).unwrap(), p / (p - 2.0)));
        }
    }

    #[test]
    fn below_m_is_unsupported() {
        assert_eq!(Regime::classify(3, 2.5), Regime::Unsupported);
        assert_eq!(multilinear_exponent(3, 2.5), Err(Error::Unsupported { m: 3, p: 2.5 }));
        assert_eq!(Regime::classify(2, 4.0), Regime::HighP);
        assert_eq!(Regime::classify(2, 3.0), Regime::Subquadratic);
        assert_eq!(Regime::classify(2, 2.0), Regime::SupNormAtPEqualsM);
    }

    #[test]
    fn mixed_exponents() {
        let e = bilinear_mixed_exponents(3.0, 3.0).unwrap();
        assert_eq!(e.inner, 2.0);
        assert!(close(e.outer, 3.0));
        assert!(close(bilinear_mixed_exponents(4.0, 4.0).unwrap().outer, 2.0));
        // 1/λ = 1 − 0 − 0
        assert_eq!(bilinear_mixed_exponents(INF, INF).unwrap().outer, 1.0);
        assert!(bilinear_mixed_exponents(2.0, 2.0).is_err());
        assert!(bilinear_mixed_exponents(1.5, 10.0).is_err());
    }

    #[test]
    fn symmetric_exponent_values() {
        assert!(close(symmetric_exponent(INF, INF).unwrap(), 4.0 / 3.0));
        assert!(close(symmetric_exponent(4.0, 4.0).unwrap(), 2.0));
        assert!(close(symmetric_exponent(8.0, 8.0).unwrap(), 1.6));
        assert!(symmetric_exponent(3.0, 3.0).is_err());
    }

    #[test]
    fn interpolation() {
        let a = ExponentPair::new(2.0, 3.0).unwrap();
        let r = interpolate_exponent_pairs(a, a.swapped(), 0.5).unwrap();
        assert!(close(r.inner, 12.0 / 5.0) && close(r.outer, 12.0 / 5.0));
        let b = ExponentPair::new(1.5, 7.0).unwrap();
        assert_eq!(interpolate_exponent_pairs(a, b, 0.0).unwrap(), b);
        // at p = q = ∞ the pair (2, 1) interpolates to the 4/3 exponent
        let inf = bilinear_mixed_exponents(INF, INF).unwrap();
        let r = interpolate_exponent_pairs(inf, inf.swapped(), 0.5).unwrap();
        assert!(close(r.inner, 4.0 / 3.0));
        for (p, q) in [(4.0, 6.0), (5.0, 5.0), (6.0, 8.0)] {
            let pair = bilinear_mixed_exponents(p, q).unwrap();
            let r = interpolate_exponent_pairs(pair, pair.swapped(), 0.5).unwrap();
            let mu = symmetric_exponent(p, q).unwrap();
            assert!(close(r.inner, mu) && close(r.outer, mu));
        }
    }

    #[test]
    fn ksz_values() {
        assert_eq!(ksz_alpha(INF).unwrap(), 0.5);
        assert_eq!(ksz_alpha(2.0).unwrap(), 0.0);
        assert!(close(ksz_alpha(3.0).unwrap(), 1.0 / 6.0));
        assert_eq!(ksz_alpha(1.5).unwrap(), 0.0);
        assert_eq!(ksz_exponent(2, &[INF, INF]).unwrap(), 1.5);
        assert!(close(ksz_exponent(2, &[3.0, 3.0]).unwrap(), 5.0 / 6.0));
        assert_eq!(ksz_exponent(2, &[2.0, 2.0]).unwrap(), 0.5);
        assert!(ksz_exponent(2, &[2.0]).is_err());
    }

    #[test]
    fn constants() {
        let real = constant_upper_bound(2, 2.0, ScalarField::Real, ConstantMethod::General).unwrap();
        assert!(close(real.value, 4.0 * 2f64.sqrt()));
        assert_eq!(real.provenance, Provenance::PEqualsM);
        let harris = constant_upper_bound(2, 2.0, ScalarField::Complex, ConstantMethod::Harris).unwrap();
        assert!(close(harris.value, 4.0 / std::f64::consts::PI.sqrt()));
        let general_c = constant_upper_bound(2, 2.0, ScalarField::Complex, ConstantMethod::General).unwrap();
        assert!(close(general_c.value, 8.0 / std::f64::consts::PI.sqrt()));
        assert!(close(constant_upper_bound(3, 3.0, ScalarField::Real, ConstantMethod::General).unwrap().value, 54.0));
        let c3 = constant_upper_bound(3, 3.0, ScalarField::Complex, ConstantMethod::General).unwrap();
        assert!(close(c3.value, (2.0 / std::f64::consts::PI.sqrt()).powi(2) * 27.0));
        // lemma form m^m/(m!)^{(p−m)/p}
        let l = constant_upper_bound(3, 4.5, ScalarField::Real, ConstantMethod::General).unwrap();
        assert!(close(l.value, 2.0 * 27.0 / 6f64.powf(1.5 / 4.5)));
        assert_eq!(l.provenance, Provenance::LemmaFactor);
        // Harris with m = 2, p > 2 gives 2·C^mult
        let h = constant_upper_bound(2, 3.0, ScalarField::Complex, ConstantMethod::Harris).unwrap();
        assert!(close(h.value, 2.0 * multilinear_base_constant(2, ScalarField::Complex)));
    }

    #[test]
    fn harris_validity() {
        assert!(constant_upper_bound(3, 3.0, ScalarField::Complex, ConstantMethod::Harris).is_err());
        assert!(constant_upper_bound(2, 3.0, ScalarField::Real, ConstantMethod::Harris).is_err());
        assert!(constant_upper_bound(2, 1.5, ScalarField::Complex, ConstantMethod::General).is_err());
    }

    #[test]
    fn table_csv() {
        let rows = exponent_table(&[2, 3], &[2.0, 2.5, INF]).unwrap();
        let mut buf = Vec::new();
        write_exponent_table(&rows, &mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert!(s.starts_with("m,p,regime,multilinear_exp,polynomial_exp,constant_real,constant_complex\n"));
        assert!(s.contains("2,inf,high-p,1.3333333333333333"));
        assert!(s.contains("3,2.5,unsupported,,,,"));
    }
}
