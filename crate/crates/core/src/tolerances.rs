//! Every numeric tolerance and iteration budget used by the library.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Maximum entry asymmetry accepted by `restrict`.
    pub symmetry: f64,
    /// Relative agreement between a reported norm and its re-evaluated witness.
    pub certificate_rel: f64,
    /// Alternating maximization stops when a sweep improves by less than this (relative).
    pub alternating_rel_change: f64,
    pub alternating_max_sweeps: usize,
    pub gradient_initial_step: f64,
    pub gradient_min_step: f64,
    pub gradient_max_iterations: usize,
    pub default_restarts: usize,
    /// Slack in the Minkowski interchange comparison.
    pub interchange: f64,
    /// Acceptance band on fitted KSZ norm-growth slopes.
    pub ksz_slope_band: f64,
    /// Acceptance band on fitted diagonal ratio-growth slopes.
    pub diagonal_slope_band: f64,
    /// Relative agreement of alternating maximization with `n^{1/λ}` on diagonal forms.
    pub diagonal_norm_rel: f64,
    /// Monte-Carlo seeds per problem size.
    pub monte_carlo_seeds: usize,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        symmetry: 1e-12,
        certificate_rel: 1e-10,
        alternating_rel_change: 1e-12,
        alternating_max_sweeps: 500,
        gradient_initial_step: 1.0,
        gradient_min_step: 1e-14,
        gradient_max_iterations: 2000,
        default_restarts: 32,
        interchange: 1e-12,
        ksz_slope_band: 0.1,
        diagonal_slope_band: 0.05,
        diagonal_norm_rel: 1e-6,
        monte_carlo_seeds: 5,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
