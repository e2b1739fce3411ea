use core::f64::consts::PI;

use num_complex::Complex64;

use super::{dilog, lobachevsky};
use crate::{real, Error, Result};

/// Orientation of an ideal tetrahedron given by its shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Positive,
    Flat,
    Negative,
}

/// Shape parameter `z` of an ideal tetrahedron `Δ(z)` with vertices
/// `0, 1, ∞, z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeParameter {
    z: Complex64,
}

impl ShapeParameter {
    /// Any `z` outside `{0, 1}`; deformed structures may have `Im z ≤ 0`.
    pub fn new(z: Complex64) -> Result<Self> {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::InvalidArgument("shape parameter must be finite"));
        }
        if z == Complex64::new(0.0, 0.0) || z == Complex64::new(1.0, 0.0) {
            return Err(Error::Degenerate("shape parameter 0 or 1"));
        }
        Ok(ShapeParameter { z })
    }

    pub fn z(self) -> Complex64 {
        self.z
    }

    pub fn orientation(self) -> Orientation {
        if self.z.im > 0.0 {
            Orientation::Positive
        } else if self.z.im < 0.0 {
            Orientation::Negative
        } else {
            Orientation::Flat
        }
    }

    /// The same tetrahedron seen from another edge: `1 − 1/z`.
    pub fn rotate(self) -> ShapeParameter {
        ShapeParameter { z: Complex64::new(1.0, 0.0) - self.z.inv() }
    }

    /// Dihedral angles `(arg z, arg(1 − 1/z), arg(1/(1 − z)))`; they sum to π
    /// for a positively oriented shape.
    pub fn angles(self) -> (f64, f64, f64) {
        let one = Complex64::new(1.0, 0.0);
        (self.z.arg(), (one - self.z.inv()).arg(), (one - self.z).inv().arg())
    }
}

/// Dihedral angles `(α, β, γ)` of an ideal tetrahedron.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DihedralAngles {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl DihedralAngles {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        let sum = alpha + beta + gamma;
        if !sum.is_finite() || real::abs(sum - PI) > 1e-12 {
            return Err(Error::InvalidArgument("dihedral angles must sum to π"));
        }
        Ok(DihedralAngles { alpha, beta, gamma })
    }
}

/// `Vol Δ(α, β, γ) = Λ(α) + Λ(β) + Λ(γ)`.
pub fn tetra_volume_angles(a: DihedralAngles) -> f64 {
    lobachevsky(a.alpha) + lobachevsky(a.beta) + lobachevsky(a.gamma)
}

/// `Vol Δ(z) = Im Li₂(z) + log|z| · arg(1 − z)`.
///
/// This is the Bloch–Wigner function: zero for real `z`, and negated under
/// `z ↦ z̄`, so negatively oriented shapes give signed volumes.
pub fn tetra_volume_shape(z: ShapeParameter) -> f64 {
    let z = z.z();
    if z.im == 0.0 {
        return 0.0;
    }
    let li = dilog(z).expect("off the real axis");
    li.im + real::ln(z.norm()) * (Complex64::new(1.0, 0.0) - z).arg()
}

/// `z w (z − 1)(w − 1) − 1`; zero exactly when the two tetrahedra glue up
/// around the edges of the figure-eight complement.
pub fn fig8_gluing_residual(z: Complex64, w: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    z * w * (z - one) * (w - one) - one
}

/// Hyperbolic volume of the figure-eight knot complement, `6Λ(π/3)`.
pub fn fig8_complete_volume() -> f64 {
    6.0 * lobachevsky(PI / 3.0)
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;

    fn shape(re: f64, im: f64) -> ShapeParameter {
        ShapeParameter::new(Complex64::new(re, im)).unwrap()
    }

    #[test]
    fn regular_tetrahedron() {
        let z = ShapeParameter::new(Complex64::from_polar(1.0, PI / 3.0)).unwrap();
        let by_shape = tetra_volume_shape(z);
        let a = DihedralAngles::new(PI / 3.0, PI / 3.0, PI / 3.0).unwrap();
        assert!((by_shape - tetra_volume_angles(a)).abs() < 1e-14);
        assert!((by_shape - 1.014941606409653625).abs() < 1e-14);
        assert!((fig8_complete_volume() - 2.0 * by_shape).abs() < 1e-14);
        assert!((fig8_complete_volume() - 2.02988321281930725).abs() < 1e-14);
    }

    #[test]
    fn degenerate_angles() {
        let a = DihedralAngles::new(0.0, PI / 2.0, PI / 2.0).unwrap();
        assert!(tetra_volume_angles(a).abs() < 1e-15);
        assert!(DihedralAngles::new(1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn shape_angles_match_volume() {
        let z = shape(0.3, 0.8);
        let (a, b, c) = z.angles();
        let angles = DihedralAngles::new(a, b, c).unwrap();
        assert!((tetra_volume_angles(angles) - tetra_volume_shape(z)).abs() < 1e-13);
    }

    #[test]
    fn rotation_and_conjugation() {
        let z = shape(-0.7, 1.3);
        let v = tetra_volume_shape(z);
        assert!((tetra_volume_shape(z.rotate()) - v).abs() < 1e-13);
        assert!((tetra_volume_shape(z.rotate().rotate()) - v).abs() < 1e-13);
        let zbar = shape(-0.7, -1.3);
        assert_eq!(zbar.orientation(), Orientation::Negative);
        assert!((tetra_volume_shape(zbar) + v).abs() < 1e-13);
    }

    #[test]
    fn flat_and_invalid_shapes() {
        assert_eq!(tetra_volume_shape(shape(0.4, 0.0)), 0.0);
        assert_eq!(tetra_volume_shape(shape(3.0, 0.0)), 0.0);
        assert_eq!(shape(0.4, 0.0).orientation(), Orientation::Flat);
        assert!(ShapeParameter::new(Complex64::new(0.0, 0.0)).is_err());
        assert!(ShapeParameter::new(Complex64::new(1.0, 0.0)).is_err());
    }

    #[test]
    fn gluing_at_complete_structure() {
        let z = Complex64::new(0.5, 3f64.sqrt() / 2.0);
        assert!(fig8_gluing_residual(z, z).norm() < 1e-15);
        let zero = Complex64::new(0.0, 0.0);
        assert_eq!(fig8_gluing_residual(zero, zero), Complex64::new(-1.0, 0.0));
    }
}
