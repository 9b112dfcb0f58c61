use super::{enumerate_multi_indices, multinomial, MultiIndex, MultilinearForm, ScalarField};
use crate::{Error, Result, Scalar};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// `P(x) = Σ_{|α|=m} a_α x^α` on `K^n`, with only nonzero coefficients stored.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "super::PolynomialRepr", into = "super::PolynomialRepr")]
pub struct HomogeneousPolynomial {
    n: usize,
    m: usize,
    field: ScalarField,
    coeffs: BTreeMap<MultiIndex, Scalar>,
}

impl HomogeneousPolynomial {
    pub fn zero(n: usize, m: usize, field: ScalarField) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        Ok(Self { n, m, field, coeffs: BTreeMap::new() })
    }

    pub fn from_coeffs<I>(n: usize, m: usize, field: ScalarField, coeffs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, Scalar)>,
    {
        let mut p = Self::zero(n, m, field)?;
        for (alpha, a) in coeffs {
            p.add_term(alpha, a)?;
        }
        Ok(p)
    }

    /// Real polynomial from `(exponents, coefficient)` pairs.
    pub fn real(n: usize, m: usize, terms: &[(&[u32], f64)]) -> Result<Self> {
        Self::from_coeffs(
            n,
            m,
            ScalarField::Real,
            terms
                .iter()
                .map(|(e, a)| (MultiIndex::new(e.to_vec()), Scalar::new(*a, 0.0))),
        )
    }

    /// Builds a polynomial from a dense coefficient vector in graded lexicographic order.
    pub fn from_dense(n: usize, m: usize, field: ScalarField, dense: &[Scalar]) -> Result<Self> {
        let idx = enumerate_multi_indices(n, m)?;
        if idx.len() != dense.len() {
            return Err(Error::DimensionMismatch { expected: idx.len(), found: dense.len() });
        }
        Self::from_coeffs(n, m, field, idx.into_iter().zip(dense.iter().copied()))
    }

    fn add_term(&mut self, alpha: MultiIndex, a: Scalar) -> Result<()> {
        if alpha.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: alpha.len() });
        }
        if alpha.degree() != self.m {
            return Err(Error::DegreeMismatch { expected: self.m, found: alpha.degree() });
        }
        if self.field == ScalarField::Real && a.im != 0.0 {
            return Err(Error::InvalidArgument(
                "real polynomial with a non-real coefficient".into(),
            ));
        }
        let entry = self.coeffs.entry(alpha).or_insert(Scalar::new(0.0, 0.0));
        *entry += a;
        if *entry == Scalar::new(0.0, 0.0) {
            self.coeffs.retain(|_, v| *v != Scalar::new(0.0, 0.0));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn coeffs(&self) -> &BTreeMap<MultiIndex, Scalar> {
        &self.coeffs
    }

    pub fn coefficient(&self, alpha: &MultiIndex) -> Scalar {
        self.coeffs.get(alpha).copied().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// All `C(n+m-1, m)` coefficients, zeros included, in graded lexicographic order.
    pub fn dense_coefficients(&self) -> Vec<Scalar> {
        enumerate_multi_indices(self.n, self.m)
            .expect("validated at construction")
            .iter()
            .map(|a| self.coefficient(a))
            .collect()
    }

    pub fn scaled(&self, t: Scalar) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(a, c)| (a.clone(), c * t))
            .filter(|(_, c)| *c != Scalar::new(0.0, 0.0))
            .collect();
        Self { coeffs, ..self.clone() }
    }

    fn check_point(&self, x: &[Scalar]) -> Result<()> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: x.len() });
        }
        Ok(())
    }

    fn powers(&self, x: &[Scalar]) -> Vec<Vec<Scalar>> {
        x.iter()
            .map(|&xj| {
                let mut row = Vec::with_capacity(self.m + 1);
                let mut acc = Scalar::new(1.0, 0.0);
                row.push(acc);
                for _ in 0..self.m {
                    acc *= xj;
                    row.push(acc);
                }
                row
            })
            .collect()
    }

    /// `Σ_α a_α x^α`.
    pub fn eval(&self, x: &[Scalar]) -> Result<Scalar> {
        self.check_point(x)?;
        let pw = self.powers(x);
        Ok(self
            .coeffs
            .iter()
            .map(|(alpha, a)| {
                alpha
                    .exponents()
                    .iter()
                    .enumerate()
                    .fold(*a, |acc, (j, &e)| acc * pw[j][e as usize])
            })
            .sum())
    }

    pub fn eval_real(&self, x: &[f64]) -> Result<Scalar> {
        let z: Vec<Scalar> = x.iter().map(|&v| Scalar::new(v, 0.0)).collect();
        self.eval(&z)
    }

    /// Value and holomorphic partial derivatives `∂P/∂x_j` at `x`.
    pub fn eval_with_gradient(&self, x: &[Scalar]) -> Result<(Scalar, Vec<Scalar>)> {
        self.check_point(x)?;
        let pw = self.powers(x);
        let mut value = Scalar::new(0.0, 0.0);
        let mut grad = vec![Scalar::new(0.0, 0.0); self.n];
        for (alpha, a) in &self.coeffs {
            let e = alpha.exponents();
            value += e
                .iter()
                .enumerate()
                .fold(*a, |acc, (j, &k)| acc * pw[j][k as usize]);
            for (j, &ej) in e.iter().enumerate() {
                if ej == 0 {
                    continue;
                }
                let mut term = *a * ej as f64;
                for (i, &ei) in e.iter().enumerate() {
                    let k = if i == j { ei - 1 } else { ei };
                    term *= pw[i][k as usize];
                }
                grad[j] += term;
            }
        }
        Ok((value, grad))
    }

    /// The unique symmetric form `L` with `a_α = C(m,α)·L(e^α)`.
    pub fn polarize(&self) -> MultilinearForm {
        let n = self.n;
        let m = self.m;
        MultilinearForm::from_fn(n, m, self.field, |tuple| {
            let alpha = MultiIndex::from_tuple(n, tuple);
            let a = self.coefficient(&alpha);
            if a == Scalar::new(0.0, 0.0) {
                return a;
            }
            a / multinomial(m, &alpha).expect("degree matches") as f64
        })
        .expect("polynomial dimensions are valid")
    }
}
