#![allow(dead_code)]

use hlab::algebra::{enumerate_multi_indices, HomogeneousPolynomial, MultilinearForm, ScalarField};
use hlab::Scalar;
use proptest::prelude::*;

pub fn scalar(field: ScalarField) -> BoxedStrategy<Scalar> {
    match field {
        ScalarField::Complex => (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(a, b)| Scalar::new(a, b)).boxed(),
        ScalarField::Real => (-2.0..2.0f64).prop_map(|a| Scalar::new(a, 0.0)).boxed(),
    }
}

pub fn field() -> impl Strategy<Value = ScalarField> {
    prop_oneof![Just(ScalarField::Real), Just(ScalarField::Complex)]
}

pub fn polynomial_in(n: usize, m: usize, field: ScalarField) -> impl Strategy<Value = HomogeneousPolynomial> {
    let d = enumerate_multi_indices(n, m).unwrap().len();
    prop::collection::vec(scalar(field), d)
        .prop_map(move |dense| HomogeneousPolynomial::from_dense(n, m, field, &dense).unwrap())
}

/// Random polynomial with `n ≤ max_n`, `m ≤ max_m`, either field.
pub fn polynomial(max_n: usize, max_m: usize) -> impl Strategy<Value = HomogeneousPolynomial> {
    (1..=max_n, 1..=max_m, field()).prop_flat_map(|(n, m, f)| polynomial_in(n, m, f))
}

pub fn form_in(n: usize, m: usize, field: ScalarField) -> impl Strategy<Value = MultilinearForm> {
    prop::collection::vec(scalar(field), n.pow(m as u32))
        .prop_map(move |e| MultilinearForm::from_entries(n, m, field, e).unwrap())
}

pub fn matrix(n: usize) -> impl Strategy<Value = MultilinearForm> {
    prop::collection::vec(-5.0..5.0f64, n * n).prop_map(move |e| MultilinearForm::from_real(n, 2, &e).unwrap())
}

/// A point of `K^n` with the field of the object it is fed to.
pub fn point(n: usize, field: ScalarField) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(scalar(field), n)
}

/// Exponent in `[1, 12]` or `∞`.
pub fn exponent() -> impl Strategy<Value = f64> {
    prop_oneof![4 => 1.0..12.0f64, 1 => Just(1.0), 1 => Just(f64::INFINITY)]
}

pub fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
}

pub fn close_c(a: Scalar, b: Scalar, rel: f64) -> bool {
    (a - b).norm() <= rel * a.norm().max(b.norm()).max(1.0)
}
