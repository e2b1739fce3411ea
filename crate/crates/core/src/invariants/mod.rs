//! Quantum invariants of braid closures.
//!
//! [`colored_jones`] takes the full trace `T(β) = a^{−w(β)} Tr(Φ(β) μ^{⊗n})`
//! and divides by the quantum dimension. [`tangle_scalar`] cuts the first
//! strand open instead; it needs no division and so works at `q = ξ_N`,
//! where [`kashaev`] evaluates it. The `fig8_*` closed forms give
//! independent values for the figure-eight knot.

mod fig8;
mod state_sum;

pub use fig8::{fig8_closed_form, fig8_double_sum, fig8_product, fig8_product_log, fig8_single_sum};
pub use state_sum::{colored_jones, kashaev, skein_residual_n2, tangle_scalar, trace_invariant};

use num_complex::Complex64;

use crate::tensorq::{qnum, ColorDim, QExponent};

/// How an [`InvariantValue`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    StateSum,
    TangleScalar,
    Fig8DoubleSum,
    Fig8Product,
    Fig8SingleSum,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::StateSum => "state_sum",
            Method::TangleScalar => "tangle_scalar",
            Method::Fig8DoubleSum => "fig8_double_sum",
            Method::Fig8Product => "fig8_product",
            Method::Fig8SingleSum => "fig8_single_sum",
        }
    }
}

/// A normalized colored Jones value tagged with where it came from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvariantValue {
    pub value: Complex64,
    pub n: ColorDim,
    pub q: QExponent,
    pub method: Method,
}

/// Whether `{N}` is numerically zero at `q`, relative to the size of its two
/// terms.
pub fn quantum_dimension_vanishes(n: ColorDim, q: QExponent) -> bool {
    let half = n.get() as f64 / 2.0;
    let scale = q.pow(half).norm() + q.pow(-half).norm();
    qnum(n.get() as i64, q).norm() <= 1e-12 * scale
}
