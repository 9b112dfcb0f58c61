//! Sharpness and optimal-constant experiments.

mod choi_kim;
mod diagonal;
mod growth;
mod interchange;
mod ksz;
mod ratio;
mod verify;

pub use choi_kim::{choi_kim_family, choi_kim_scan, ChoiKimCase, ChoiKimRow, ChoiKimScan};
pub use diagonal::{diagonal_form, diagonal_norm_exact, diagonal_sharpness, DiagonalFit, DiagonalReport, DiagonalRow};
pub use growth::{fit_growth, GrowthFit};
pub use interchange::{minkowski_interchange_check, InterchangeCheck};
pub use ksz::{ksz_random_form, sharpness_experiment, KszCell, SharpnessOptions, SharpnessReport};
pub use ratio::{
    check_limit_sequence, limit_trace_p_to_m, poly_ratio, ratio, ratio_with, search_constant_lower, search_constant_lower_with,
    RatioEstimate, RatioObject, RatioSearchResult, SearchOptions,
};
pub use verify::{verify_inequality, VerifyOptions, VerifyReport, VerifyRow};
