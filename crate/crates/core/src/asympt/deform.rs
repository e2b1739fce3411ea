//! The saddle point of the figure-eight potential along `q = e^{θ/N}`,
//! `θ = u + 2πi`, and the incomplete hyperbolic structure it describes.
//!
//! Writing `x = e^u`, the saddle `y` solves `y + 1/y = x + 1/x − 1`, and the
//! two ideal tetrahedra of the complement have shapes
//! `z = y/(y − x)`, `w = x − y` (so that `x = w(1 − z)`, `y = −zw`). The
//! potential is
//!
//! ```text
//! H(u) = Li₂(1/(xy)) − Li₂(y/x) + u · log y
//! ```
//!
//! with `dH/du = log(z(z − 1))`. At `u = 0` the structure is complete:
//! `z = w = e^{iπ/3}`, `y = e^{−iπ/3}` and `Im H(0)` is the volume.
//!
//! Square roots and logarithms are continued along the segment `[0, u]` in
//! steps of at most 0.01, starting from `log y(0) = 5πi/3` and
//! `log(z(z−1))(0) = πi`.

use core::f64::consts::PI;

use num_complex::Complex64;

use crate::hypgeom::dilog;
use crate::{real, Error, Result};

/// Largest `|u|` accepted by the path tracker.
pub const SUPPORTED_RADIUS: f64 = 0.5;

const MAX_STEP: f64 = 0.01;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Everything determined by the deformation parameter `u`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeformationState {
    pub u: Complex64,
    /// `u + 2πi`, kept as a logarithm.
    pub theta: Complex64,
    pub x: Complex64,
    pub y: Complex64,
    /// Continuous branch of `log y`.
    pub log_y: Complex64,
    pub z: Complex64,
    pub w: Complex64,
    /// Continuous branch of `log(z(z − 1))`, equal to `dH/du`.
    pub log_zz: Complex64,
    pub h: Complex64,
    /// `2 dH/du − 2πi`, the logarithm of the longitude eigenvalue.
    pub v: Complex64,
}

fn roots(x: Complex64) -> Result<(Complex64, Complex64)> {
    let s = x + x.inv() - 1.0;
    let disc = (s * s - 4.0).sqrt();
    if disc.norm() < 1e-8 {
        return Err(Error::Degenerate("double root of the saddle equation"));
    }
    Ok(((s + disc) * 0.5, (s - disc) * 0.5))
}

fn crosses_cut(a: Complex64, b: Complex64) -> bool {
    (a.im > 0.0) != (b.im > 0.0) && (a.re > 1.0 || b.re > 1.0)
}

impl DeformationState {
    pub fn new(u: Complex64) -> Result<Self> {
        if !(u.re.is_finite() && u.im.is_finite()) {
            return Err(Error::InvalidArgument("u must be finite"));
        }
        let modulus = u.norm();
        if modulus > SUPPORTED_RADIUS {
            return Err(Error::OutsideSupportedRegion { modulus, limit: SUPPORTED_RADIUS });
        }

        let mut y = Complex64::from_polar(1.0, -PI / 3.0);
        let mut log_y = c(0.0, 5.0 * PI / 3.0);
        let mut x = c(1.0, 0.0);
        let mut zz = c(-1.0, 0.0);
        let mut log_zz = c(0.0, PI);
        let mut args = (y.inv(), y);

        let steps = real::floor(modulus / MAX_STEP) as usize + 1;
        for s in 1..=steps {
            let t = u * (s as f64 / steps as f64);
            x = t.exp();
            let (r1, r2) = roots(x)?;
            let (d1, d2) = ((r1 - y).norm(), (r2 - y).norm());
            if d1.min(d2) > 0.5 * d1.max(d2) {
                return Err(Error::BranchTracking("saddle roots too close to separate"));
            }
            let next = if d1 < d2 { r1 } else { r2 };
            log_y += (next / y).ln();
            y = next;

            let z = y / (y - x);
            let next_zz = z * (z - 1.0);
            log_zz += (next_zz / zz).ln();
            zz = next_zz;

            let next_args = ((y * x).inv(), y / x);
            if crosses_cut(args.0, next_args.0) || crosses_cut(args.1, next_args.1) {
                return Err(Error::BranchTracking("dilogarithm argument crosses its branch cut"));
            }
            args = next_args;
        }

        let z = y / (y - x);
        let w = x - y;
        for s in [z, w] {
            if s.norm() < 1e-12 || (s - 1.0).norm() < 1e-12 {
                return Err(Error::Degenerate("shape parameter at 0 or 1"));
            }
        }
        let h = dilog(args.0)? - dilog(args.1)? + u * log_y;
        let v = log_zz * 2.0 - c(0.0, 2.0 * PI);
        Ok(DeformationState {
            u,
            theta: u + c(0.0, 2.0 * PI),
            x,
            y,
            log_y,
            z,
            w,
            log_zz,
            h,
            v,
        })
    }

    /// `|y + 1/y − e^θ − e^{−θ} + 1|`.
    pub fn saddle_residual(&self) -> f64 {
        (self.y + self.y.inv() - self.theta.exp() - (-self.theta).exp() + 1.0).norm()
    }

    /// `|z w (z−1)(w−1) − 1|`.
    pub fn gluing_residual(&self) -> f64 {
        crate::hypgeom::fig8_gluing_residual(self.z, self.w).norm()
    }

    /// `Im H − π Re u − ½ Re u · Im v`.
    pub fn filled_volume(&self) -> f64 {
        self.h.im - PI * self.u.re - 0.5 * self.u.re * self.v.im
    }
}

/// The saddle `y(u)` on the branch through `e^{−iπ/3}` at `u = 0`.
pub fn saddle_solve(u: Complex64) -> Result<Complex64> {
    Ok(DeformationState::new(u)?.y)
}

/// `H(u)`.
pub fn potential_h(u: Complex64) -> Result<Complex64> {
    Ok(DeformationState::new(u)?.h)
}

/// `v(u) = 2 dH/du − 2πi`.
pub fn v_of_u(u: Complex64) -> Result<Complex64> {
    Ok(DeformationState::new(u)?.v)
}

/// Shapes `(z, w)` of the two tetrahedra.
pub fn shapes_from_u(u: Complex64) -> Result<(Complex64, Complex64)> {
    let s = DeformationState::new(u)?;
    Ok((s.z, s.w))
}

/// Volume of the incomplete structure with meridian parameter `u`.
pub fn filled_volume(u: Complex64) -> Result<f64> {
    Ok(DeformationState::new(u)?.filled_volume())
}

/// Real `(p, q)` with `p u + q v = 2πi`.
pub fn dehn_coefficients(u: Complex64, v: Complex64) -> Result<(f64, f64)> {
    let det = u.re * v.im - v.re * u.im;
    let scale = u.norm() * v.norm();
    if scale == 0.0 || real::abs(det) <= 1e-12 * scale {
        return Err(Error::Singular("u and v are real-linearly dependent"));
    }
    let p = -v.re * 2.0 * PI / det;
    let q = u.re * 2.0 * PI / det;
    Ok((p, q))
}

/// `−(1/2π) Im(u v̄)`, the length of the core geodesic.
pub fn core_length(u: Complex64, v: Complex64) -> Result<f64> {
    let len = -(u * v.conj()).im / (2.0 * PI);
    if len < -1e-10 {
        return Err(Error::BranchTracking("negative core length"));
    }
    Ok(len)
}

/// Dehn-filling data of the incomplete structure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DehnFilling {
    pub p: f64,
    pub q: f64,
    pub core_length: f64,
    /// Complex length `length + i·torsion` of the core, known when `(p, q)`
    /// are coprime integers; the torsion is defined modulo 2π.
    pub kappa: Option<Complex64>,
}

fn as_integer(x: f64) -> Option<i64> {
    let r = real::round(x);
    (real::abs(x - r) <= 1e-8 && real::abs(r) < 1e15).then_some(r as i64)
}

/// `(g, r, s)` with `g = gcd(a, b) = a s − b r`.
fn bezout(a: i64, b: i64) -> (i64, i64, i64) {
    // Extended Euclid for a·x + b·y = g, then r = −y, s = x.
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1i64, 0i64);
    let (mut y0, mut y1) = (0i64, 1i64);
    while r1 != 0 {
        let t = r0 / r1;
        (r0, r1) = (r1, r0 - t * r1);
        (x0, x1) = (x1, x0 - t * x1);
        (y0, y1) = (y1, y0 - t * y1);
    }
    if r0 < 0 {
        (r0, x0, y0) = (-r0, -x0, -y0);
    }
    (r0, -y0, x0)
}

/// Solves for `(p, q)`, the core length and, for coprime integral `(p, q)`,
/// the complex length `κ = ±(r u + s v)` with `p s − q r = 1`, signed so
/// that `Re κ ≥ 0`.
pub fn dehn_filling(u: Complex64, v: Complex64) -> Result<DehnFilling> {
    let (p, q) = dehn_coefficients(u, v)?;
    let length = core_length(u, v)?;
    let kappa = match (as_integer(p), as_integer(q)) {
        (Some(pi), Some(qi)) => {
            let (g, r, s) = bezout(pi, qi);
            if g == 1 {
                let k = u * r as f64 + v * s as f64;
                Some(if k.re < 0.0 { -k } else { k })
            } else {
                None
            }
        }
        _ => None,
    };
    Ok(DehnFilling { p, q, core_length: length, kappa })
}

/// `−iH(u) − πu + u v i/4 − πκ/2`, whose real part is the volume and
/// imaginary part the Chern–Simons invariant (mod π²).
///
/// At the cusp `κ = 0`. When `(p, q)` is not a coprime integer pair the
/// torsion is unknown and only the length enters `κ`, which leaves the real
/// part intact.
pub fn vol_cs_combination(u: Complex64) -> Result<Complex64> {
    let s = DeformationState::new(u)?;
    let kappa = match dehn_filling(s.u, s.v) {
        Ok(d) => d.kappa.unwrap_or(c(d.core_length, 0.0)),
        Err(Error::Singular(_)) => c(0.0, 0.0),
        Err(e) => return Err(e),
    };
    let i = c(0.0, 1.0);
    Ok(-i * s.h - s.u * PI + s.u * s.v * i / 4.0 - kappa * (PI / 2.0))
}
