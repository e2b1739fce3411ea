//! Lobachevsky function, dilogarithm and ideal hyperbolic tetrahedra.

mod dilog;
mod lobachevsky;
mod tetra;

pub use dilog::dilog;
pub use lobachevsky::{clausen2, lobachevsky};
pub use tetra::{
    fig8_complete_volume, fig8_gluing_residual, tetra_volume_angles, tetra_volume_shape, DihedralAngles,
    Orientation, ShapeParameter,
};
