use super::{enumerate_multi_indices, multinomial, HomogeneousPolynomial, MultiIndex, ScalarField};
use crate::{Error, Result, Scalar, Tolerances};
use serde::{Deserialize, Serialize};

/// Dense `m`-way coefficient tensor `T(e_{j1},…,e_{jm})`, row-major (last slot fastest).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "super::FormRepr", into = "super::FormRepr")]
pub struct MultilinearForm {
    n: usize,
    m: usize,
    field: ScalarField,
    entries: Vec<Scalar>,
}

impl MultilinearForm {
    pub fn zeros(n: usize, m: usize, field: ScalarField) -> Result<Self> {
        let len = checked_len(n, m)?;
        Ok(Self { n, m, field, entries: vec![Scalar::new(0.0, 0.0); len] })
    }

    pub fn from_entries(n: usize, m: usize, field: ScalarField, entries: Vec<Scalar>) -> Result<Self> {
        let len = checked_len(n, m)?;
        if entries.len() != len {
            return Err(Error::DimensionMismatch { expected: len, found: entries.len() });
        }
        if field == ScalarField::Real && entries.iter().any(|e| e.im != 0.0) {
            return Err(Error::InvalidArgument("real form with a non-real entry".into()));
        }
        Ok(Self { n, m, field, entries })
    }

    pub fn from_real(n: usize, m: usize, entries: &[f64]) -> Result<Self> {
        Self::from_entries(
            n,
            m,
            ScalarField::Real,
            entries.iter().map(|&v| Scalar::new(v, 0.0)).collect(),
        )
    }

    pub fn from_fn<F>(n: usize, m: usize, field: ScalarField, mut f: F) -> Result<Self>
    where
        F: FnMut(&[usize]) -> Scalar,
    {
        let len = checked_len(n, m)?;
        let mut entries = Vec::with_capacity(len);
        let mut tuple = vec![0usize; m];
        for _ in 0..len {
            entries.push(f(&tuple));
            advance(&mut tuple, n);
        }
        Self::from_entries(n, m, field, entries)
    }

    /// `A_n(x, y) = Σ_j x_j y_j`.
    pub fn identity_bilinear(n: usize) -> Result<Self> {
        Self::from_fn(n, 2, ScalarField::Real, |t| {
            Scalar::new(if t[0] == t[1] { 1.0 } else { 0.0 }, 0.0)
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arity(&self) -> usize {
        self.m
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn flat_index(&self, tuple: &[usize]) -> usize {
        tuple.iter().fold(0, |acc, &j| acc * self.n + j)
    }

    pub fn entry(&self, tuple: &[usize]) -> Scalar {
        self.entries[self.flat_index(tuple)]
    }

    pub fn scaled(&self, t: Scalar) -> Self {
        Self { entries: self.entries.iter().map(|e| e * t).collect(), ..self.clone() }
    }

    /// Swaps the two slots of a bilinear form.
    pub fn transpose(&self) -> Result<Self> {
        if self.m != 2 {
            return Err(Error::NotBilinear(self.m));
        }
        Self::from_fn(self.n, 2, self.field, |t| self.entry(&[t[1], t[0]]))
    }

    fn check_points(&self, xs: &[&[Scalar]]) -> Result<()> {
        if xs.len() != self.m {
            return Err(Error::ArityMismatch { expected: self.m, found: xs.len() });
        }
        for x in xs {
            if x.len() != self.n {
                return Err(Error::DimensionMismatch { expected: self.n, found: x.len() });
            }
        }
        Ok(())
    }

    /// The linear functional `T(x_1,…,x_{k-1}, ·, x_{k+1},…,x_m)` as a coefficient vector.
    ///
    /// The entry for `xs[slot]` is ignored.
    pub fn contract_except(&self, slot: usize, xs: &[&[Scalar]]) -> Result<Vec<Scalar>> {
        self.check_points(xs)?;
        if slot >= self.m {
            return Err(Error::ArityMismatch { expected: self.m, found: slot + 1 });
        }
        Ok(self.contract_unchecked(slot, xs))
    }

    pub(crate) fn contract_unchecked(&self, slot: usize, xs: &[&[Scalar]]) -> Vec<Scalar> {
        let n = self.n;
        let mut data: Vec<Scalar> = self.entries.clone();
        // trailing slots: contiguous chunks of n
        for s in (slot + 1..self.m).rev() {
            let x = xs[s];
            data = data
                .chunks_exact(n)
                .map(|chunk| chunk.iter().zip(x).map(|(a, b)| a * b).sum())
                .collect();
        }
        // leading slots: outermost stride
        for x in xs.iter().take(slot) {
            let stride = data.len() / n;
            let mut next = vec![Scalar::new(0.0, 0.0); stride];
            for (j, xj) in x.iter().enumerate() {
                let block = &data[j * stride..(j + 1) * stride];
                for (acc, v) in next.iter_mut().zip(block) {
                    *acc += v * xj;
                }
            }
            data = next;
        }
        data
    }

    /// `Σ T(e_{j1},…,e_{jm}) x^{(1)}_{j1} ⋯ x^{(m)}_{jm}`.
    pub fn eval(&self, xs: &[&[Scalar]]) -> Result<Scalar> {
        self.check_points(xs)?;
        Ok(self.eval_unchecked(xs))
    }

    pub(crate) fn eval_unchecked(&self, xs: &[&[Scalar]]) -> Scalar {
        let phi = self.contract_unchecked(0, xs);
        phi.iter().zip(xs[0]).map(|(a, b)| a * b).sum()
    }

    pub fn eval_real(&self, xs: &[&[f64]]) -> Result<Scalar> {
        let owned: Vec<Vec<Scalar>> = xs
            .iter()
            .map(|x| x.iter().map(|&v| Scalar::new(v, 0.0)).collect())
            .collect();
        let refs: Vec<&[Scalar]> = owned.iter().map(|v| v.as_slice()).collect();
        self.eval(&refs)
    }

    /// Evaluation on the diagonal `T(x, …, x)`.
    pub fn eval_diagonal(&self, x: &[Scalar]) -> Result<Scalar> {
        let xs = vec![x; self.m];
        self.eval(&xs)
    }

    /// Largest `|T(t) − T(sort(t))|` over all index tuples.
    pub fn max_asymmetry(&self) -> f64 {
        let mut tuple = vec![0usize; self.m];
        let mut sorted = vec![0usize; self.m];
        let mut worst: f64 = 0.0;
        for e in &self.entries {
            sorted.copy_from_slice(&tuple);
            sorted.sort_unstable();
            worst = worst.max((e - self.entry(&sorted)).norm());
            advance(&mut tuple, self.n);
        }
        worst
    }

    pub fn is_symmetric(&self) -> bool {
        self.max_asymmetry() <= Tolerances::DEFAULT.symmetry
    }

    /// Averages every entry over the `m!` permutations of its slots.
    pub fn symmetrize(&self) -> Self {
        let perms = permutations(self.m);
        let weight = 1.0 / perms.len() as f64;
        let mut permuted = vec![0usize; self.m];
        Self::from_fn(self.n, self.m, self.field, |tuple| {
            let mut acc = Scalar::new(0.0, 0.0);
            for perm in &perms {
                for (dst, &src) in permuted.iter_mut().zip(perm) {
                    *dst = tuple[src];
                }
                acc += self.entry(&permuted);
            }
            acc * weight
        })
        .expect("same shape")
    }

    /// Inverse of polarization: `a_α = C(m,α)·L(e^α)`.
    pub fn restrict(&self) -> Result<HomogeneousPolynomial> {
        let asym = self.max_asymmetry();
        if asym > Tolerances::DEFAULT.symmetry {
            return Err(Error::NotSymmetric(asym));
        }
        let idx = enumerate_multi_indices(self.n, self.m)?;
        let terms: Vec<(MultiIndex, Scalar)> = idx
            .into_iter()
            .map(|alpha| {
                let l = self.entry(&alpha.to_tuple());
                let c = multinomial(self.m, &alpha).expect("degree matches") as f64;
                (alpha, l * c)
            })
            .filter(|(_, a)| *a != Scalar::new(0.0, 0.0))
            .collect();
        HomogeneousPolynomial::from_coeffs(self.n, self.m, self.field, terms)
    }
}

fn checked_len(n: usize, m: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    if m == 0 {
        return Err(Error::ZeroDegree);
    }
    n.checked_pow(m as u32)
        .ok_or_else(|| Error::InvalidArgument(format!("form of size {n}^{m} is too large")))
}

/// Row-major odometer step.
pub(crate) fn advance(tuple: &mut [usize], n: usize) {
    for slot in tuple.iter_mut().rev() {
        *slot += 1;
        if *slot < n {
            return;
        }
        *slot = 0;
    }
}

pub(crate) fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(m), &mut vec![false; m], &mut out);
    out
}
