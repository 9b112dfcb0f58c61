//! Numerical laboratory for Hardy–Littlewood type inequalities on `ℓ_p^n`.
//!
//! The crate is organised in five layers:
//!
//! * [`algebra`]: multi-indices, homogeneous polynomials, multilinear forms,
//!   polarization and coefficient / mixed norms.
//! * [`normopt`]: certified lower bounds on sup norms over `ℓ_p` balls
//!   (alternating maximization, projected gradient ascent) and rigorous
//!   Hölder-type upper bounds.
//! * [`theory`]: closed-form exponents, regimes and constant bounds.
//! * [`certificates`]: sharpness and optimal-constant experiments.
//! * [`harness`]: the seeded experiment runner behind the `hlab` binary.
//!
//! Restart loops and experiment grids run on rayon when the `parallel`
//! feature is enabled (the default); see [`exec`].

// `!(x > 0.0)` style guards are meant to reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algebra;
pub mod certificates;
pub mod error;
pub mod exec;
pub mod harness;
pub mod normopt;
pub mod serde_ext;
pub mod theory;
pub mod tolerances;

pub use algebra::{
    coeff_norm, enumerate_multi_indices, mixed_norm_bilinear, multinomial, HomogeneousPolynomial,
    MultiIndex, MultilinearForm, ScalarField,
};
pub use error::{Error, Result};
pub use exec::Execution;
pub use normopt::{BallSpec, NormEstimate};
pub use tolerances::Tolerances;

/// Scalars are stored as complex doubles; real objects keep a zero imaginary part.
pub type Scalar = num_complex::Complex64;
