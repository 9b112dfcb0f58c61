//! Exact multi-index algebra: polynomials, multilinear forms, polarization and norms.

mod form;
mod multi_index;
mod norms;
mod polynomial;
mod serial;

pub use form::MultilinearForm;
pub use multi_index::{enumerate_multi_indices, multinomial, MultiIndex};
pub use norms::{coeff_norm, lp_norm, mixed_norm_bilinear, CoefficientNorm};
pub use polynomial::HomogeneousPolynomial;
pub use serial::{FormRepr, PolynomialRepr, ScalarRepr};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarField {
    Real,
    Complex,
}

impl std::fmt::Display for ScalarField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ScalarField::Real => f.write_str("real"),
            ScalarField::Complex => f.write_str("complex"),
        }
    }
}

impl std::str::FromStr for ScalarField {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "real" | "r" => Ok(ScalarField::Real),
            "complex" | "c" => Ok(ScalarField::Complex),
            other => Err(crate::Error::InvalidArgument(format!("unknown field {other:?}"))),
        }
    }
}
