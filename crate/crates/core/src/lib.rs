//! Colored Jones polynomials of braid closures and the hyperbolic-volume
//! asymptotics of the figure-eight knot.
//!
//! The crate is organized bottom-up:
//!
//! - [`braid`]: braid words, closures, Markov moves.
//! - [`tensorq`]: q-numbers, the sl₂ R-matrix with its enhancement μ, and the
//!   banded contraction engine that carries Φ(β).
//! - [`invariants`]: the trace invariant, J_N from any braid, the (1,1)-tangle
//!   scalar, and the closed forms for the figure-eight knot.
//! - [`hypgeom`]: Lobachevsky function, dilogarithm, ideal tetrahedra.
//! - [`asympt`]: limit sequences and fits, the saddle-point deformation H(u),
//!   Dehn filling data, and the Alexander-polynomial limit.
//!
//! Everything here is pure computation over `f64` complex numbers. The crate
//! builds without `std` (it needs `alloc`); the default `std` feature only
//! switches the float intrinsics from `libm` to the platform ones.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod asympt;
pub mod braid;
mod error;
pub mod hypgeom;
pub mod invariants;
mod logc;
pub(crate) mod real;
pub mod tensorq;

pub use error::{Error, Result};
pub use logc::LogComplex;

pub use num_complex::Complex64;
