//! JSON shapes for polynomials and forms.
//!
//! Polynomial: `{"field":"real","n":2,"m":2,"coeffs":[{"alpha":[1,1],"re":1.0,"im":0.0}]}`
//! with coefficients in graded lexicographic order.
//!
//! Form: `{"field":"real","n":2,"m":2,"shape":[2,2],"entries":[{"re":…,"im":…},…]}`
//! with entries flattened row-major (last slot fastest).

use super::{HomogeneousPolynomial, MultiIndex, MultilinearForm, ScalarField};
use crate::{Error, Scalar};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScalarRepr {
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermRepr {
    pub alpha: Vec<u32>,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialRepr {
    pub field: ScalarField,
    pub n: usize,
    pub m: usize,
    pub coeffs: Vec<TermRepr>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormRepr {
    pub field: ScalarField,
    pub n: usize,
    pub m: usize,
    pub shape: Vec<usize>,
    pub entries: Vec<ScalarRepr>,
}

impl From<HomogeneousPolynomial> for PolynomialRepr {
    fn from(p: HomogeneousPolynomial) -> Self {
        PolynomialRepr {
            field: p.field(),
            n: p.n(),
            m: p.degree(),
            coeffs: p
                .coeffs()
                .iter()
                .map(|(a, c)| TermRepr { alpha: a.exponents().to_vec(), re: c.re, im: c.im })
                .collect(),
        }
    }
}

impl TryFrom<PolynomialRepr> for HomogeneousPolynomial {
    type Error = Error;

    fn try_from(r: PolynomialRepr) -> Result<Self, Error> {
        HomogeneousPolynomial::from_coeffs(
            r.n,
            r.m,
            r.field,
            r.coeffs
                .into_iter()
                .map(|t| (MultiIndex::new(t.alpha), Scalar::new(t.re, t.im))),
        )
    }
}

impl From<MultilinearForm> for FormRepr {
    fn from(f: MultilinearForm) -> Self {
        FormRepr {
            field: f.field(),
            n: f.n(),
            m: f.arity(),
            shape: vec![f.n(); f.arity()],
            entries: f.entries().iter().map(|c| ScalarRepr { re: c.re, im: c.im }).collect(),
        }
    }
}

impl TryFrom<FormRepr> for MultilinearForm {
    type Error = Error;

    fn try_from(r: FormRepr) -> Result<Self, Error> {
        if r.shape.len() != r.m || r.shape.iter().any(|&s| s != r.n) {
            return Err(Error::InvalidArgument(format!(
                "shape {:?} does not match n = {}, m = {}",
                r.shape, r.n, r.m
            )));
        }
        MultilinearForm::from_entries(
            r.n,
            r.m,
            r.field,
            r.entries.into_iter().map(|s| Scalar::new(s.re, s.im)).collect(),
        )
    }
}
