use core::fmt;
use core::ops::Mul;

use num_complex::Complex64;

use crate::real;

/// A complex number stored as its logarithm: `value = exp(self.log())`.
///
/// Used where magnitudes leave the `f64` range, e.g. J_N(E; ξ_N) ≈ e^{0.32 N}.
/// The real part is ln|value|, the imaginary part a phase (defined mod 2π).
/// Zero is represented by a real part of −∞.
#[derive(Clone, Copy, PartialEq)]
pub struct LogComplex(Complex64);

impl Mul for LogComplex {
    type Output = Self;

    fn mul(self, other: Self) -> Self {
        if self.is_zero() || other.is_zero() {
            Self::ZERO
        } else {
            LogComplex(self.0 + other.0)
        }
    }
}

impl LogComplex {
    pub const ZERO: Self = LogComplex(Complex64::new(f64::NEG_INFINITY, 0.0));
    pub const ONE: Self = LogComplex(Complex64::new(0.0, 0.0));

    pub fn from_log(log: Complex64) -> Self {
        LogComplex(log)
    }

    pub fn from_complex(z: Complex64) -> Self {
        if z == Complex64::new(0.0, 0.0) {
            Self::ZERO
        } else {
            LogComplex(z.ln())
        }
    }

    pub fn log(self) -> Complex64 {
        self.0
    }

    pub fn ln_abs(self) -> f64 {
        self.0.re
    }

    pub fn is_zero(self) -> bool {
        self.0.re == f64::NEG_INFINITY
    }

    /// Converts back; overflows to infinity when ln|value| > ~709.
    pub fn to_complex(self) -> Complex64 {
        if self.is_zero() {
            Complex64::new(0.0, 0.0)
        } else {
            self.0.exp()
        }
    }

    /// Sum of many terms with a common scale factor pulled out first.
    pub fn sum<I: IntoIterator<Item = Self>>(terms: I) -> Self
    where
        I::IntoIter: Clone,
    {
        let terms = terms.into_iter();
        let scale = terms
            .clone()
            .filter(|t| !t.is_zero())
            .map(|t| t.0.re)
            .fold(f64::NEG_INFINITY, f64::max);
        if scale == f64::NEG_INFINITY {
            return Self::ZERO;
        }
        let acc: Complex64 = terms
            .filter(|t| !t.is_zero())
            .map(|t| Complex64::new(t.0.re - scale, t.0.im).exp())
            .sum();
        let mut out = LogComplex::from_complex(acc);
        if !out.is_zero() {
            out.0.re += scale;
        }
        out
    }

    /// Phase reduced to (−π, π].
    pub fn arg(self) -> f64 {
        let tau = 2.0 * core::f64::consts::PI;
        let a = real::rem_euclid(self.0.im + core::f64::consts::PI, tau) - core::f64::consts::PI;
        if a == -core::f64::consts::PI {
            core::f64::consts::PI
        } else {
            a
        }
    }
}

impl fmt::Debug for LogComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "exp({} + {}i)", self.0.re, self.0.im)
    }
}
