use crate::algebra::lp_norm;
use crate::{Error, Result, Scalar};

/// Hölder conjugate `p/(p−1)`, with `1 ↔ ∞`.
pub fn dual_exponent(p: f64) -> Result<f64> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidExponent(p));
    }
    Ok(if p == 1.0 {
        f64::INFINITY
    } else if p == f64::INFINITY {
        1.0
    } else {
        p / (p - 1.0)
    })
}

pub fn vector_norm(x: &[Scalar], p: f64) -> f64 {
    lp_norm(x.iter().map(|c| c.norm()), p)
}

/// `x / ‖x‖_p`, or `None` for the zero vector.
pub fn normalize_to_sphere(x: &[Scalar], p: f64) -> Option<Vec<Scalar>> {
    let nrm = vector_norm(x, p);
    if nrm == 0.0 || !nrm.is_finite() {
        return None;
    }
    Some(x.iter().map(|c| c / nrm).collect())
}

/// Unit-modulus `u` with `φ·u = |φ|`; zero maps to `+1`.
fn aligning_phase(phi: Scalar) -> Scalar {
    let r = phi.norm();
    if r == 0.0 {
        Scalar::new(1.0, 0.0)
    } else {
        phi.conj() / r
    }
}

/// Maximizer of `x ↦ |Σ φ_j x_j|` over the unit `ℓ_p` ball, with `Σ φ_j x_j = ‖φ‖_{p'}` real.
pub fn norming_vector(phi: &[Scalar], p: f64) -> Result<(Vec<Scalar>, f64)> {
    let q = dual_exponent(p)?;
    let value = vector_norm(phi, q);
    if value == 0.0 {
        return Err(Error::ZeroVector);
    }
    let x = if p == f64::INFINITY {
        phi.iter().map(|&f| aligning_phase(f)).collect()
    } else if p == 1.0 {
        let mut best = 0;
        for (j, f) in phi.iter().enumerate() {
            if f.norm() > phi[best].norm() {
                best = j;
            }
        }
        let mut x = vec![Scalar::new(0.0, 0.0); phi.len()];
        x[best] = aligning_phase(phi[best]);
        x
    } else {
        phi.iter()
            .map(|&f| aligning_phase(f) * (f.norm() / value).powf(q - 1.0))
            .collect()
    };
    Ok((x, value))
}
