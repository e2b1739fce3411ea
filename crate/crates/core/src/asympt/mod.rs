//! Asymptotics of the figure-eight colored Jones polynomial.
//!
//! - [`growth_factor`], [`growth_partial`]: the terms of the Kashaev sum.
//! - [`volume_limit_series`], [`fit_limit`]: the sequence
//!   `2π log|J_N(ξ_N)| / N` and its extrapolation.
//! - [`DeformationState`] and friends: the saddle point of the potential
//!   `H(u)` along `q = e^{(u+2πi)/N}`, the shapes of the deformed
//!   triangulation, and the Dehn-filling data of the incomplete structure.
//! - [`alexander_limit_check`]: `J_N(e^{θ/N}) → 1/Δ(e^θ)`.

mod alexander;
mod deform;
mod growth;
mod limit;

pub use alexander::{alexander_fig8, alexander_limit_check, alexander_target};
pub use deform::{
    core_length, dehn_coefficients, dehn_filling, filled_volume, potential_h, saddle_solve, shapes_from_u,
    v_of_u, vol_cs_combination, DeformationState, DehnFilling, SUPPORTED_RADIUS,
};
pub use growth::{growth_argmax, growth_factor, growth_partial, growth_partial_log};
pub use limit::{
    fit_limit, volume_limit_series, BraidKnot, Fig8Closed, FitResult, KnotEvaluator, LimitSeries,
};
