use super::{dual_exponent, poly_norm_lower, BallSpec, NormEstimate};
use crate::algebra::{lp_norm, HomogeneousPolynomial, MultilinearForm};
use crate::{Error, Result, Tolerances};

/// Rigorous upper bound `‖T‖ ≤ ‖(‖(…‖T(e_{j1},…,e_{j_{m−1}},·)‖_{p_m'} …)_{j2}‖_{p_2'})_{j1}‖_{p_1'}`.
///
/// The last slot is exact (dual norm of a functional); every earlier slot
/// uses the triangle inequality followed by Hölder.
pub fn form_norm_upper(t: &MultilinearForm, balls: &BallSpec) -> Result<f64> {
    if balls.len() != t.arity() {
        return Err(Error::ArityMismatch { expected: t.arity(), found: balls.len() });
    }
    let n = t.n();
    let mut data: Vec<f64> = t.entries().iter().map(|c| c.norm()).collect();
    for &p in balls.p_values().iter().rev() {
        let q = dual_exponent(p)?;
        data = data.chunks_exact(n).map(|c| lp_norm(c.iter().copied(), q)).collect();
    }
    Ok(data[0])
}

#[derive(Debug, Clone, PartialEq)]
pub struct PolyNormBracket {
    pub lower: f64,
    pub upper: f64,
    pub estimate: NormEstimate,
}

/// `‖P‖` bracketed between a gradient-ascent witness and `form_norm_upper(polarize(P))`.
pub fn poly_norm_bracket(p: &HomogeneousPolynomial, exponent: f64) -> Result<PolyNormBracket> {
    let estimate = poly_norm_lower(p, exponent, Tolerances::DEFAULT.default_restarts, 0)?;
    let upper = form_norm_upper(&p.polarize(), &BallSpec::uniform(exponent, p.degree())?)?;
    Ok(PolyNormBracket { lower: estimate.value, upper, estimate })
}
