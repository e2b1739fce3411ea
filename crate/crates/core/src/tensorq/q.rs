use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::{Error, Result};

/// The evaluation point `q = e^h`, carried through its logarithm so that
/// fractional powers `q^r = e^{r h}` are single-valued.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QExponent {
    h: Complex64,
}

impl QExponent {
    pub fn new(h: Complex64) -> Result<Self> {
        if !(h.re.is_finite() && h.im.is_finite()) {
            return Err(Error::InvalidArgument("q-exponent must be finite"));
        }
        Ok(QExponent { h })
    }

    /// `ξ_N = e^{2πi/N}`.
    pub fn root_of_unity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("root of unity order must be positive"));
        }
        Ok(QExponent { h: Complex64::new(0.0, 2.0 * PI / n as f64) })
    }

    /// `q = e^{(u + 2πi)/N}`, the deformed evaluation point.
    pub fn deformed(u: Complex64, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("color must be positive"));
        }
        Self::new((u + Complex64::new(0.0, 2.0 * PI)) / n as f64)
    }

    /// `q = e^{θ/N}`.
    pub fn from_theta(theta: Complex64, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("color must be positive"));
        }
        Self::new(theta / n as f64)
    }

    pub fn h(self) -> Complex64 {
        self.h
    }

    pub fn q(self) -> Complex64 {
        self.h.exp()
    }

    /// `q^r`.
    pub fn pow(self, r: f64) -> Complex64 {
        let re = self.h.re * r;
        let im = self.h.im * r;
        let re_err = num_traits::Float::mul_add(self.h.re, r, -re);
        let im_err = num_traits::Float::mul_add(self.h.im, r, -im);
        Complex64::new(re, im).exp() * Complex64::new(1.0 + re_err, im_err)
    }
}

/// Dimension of the colored representation V.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorDim(usize);

impl ColorDim {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("color dimension must be at least 1"));
        }
        Ok(ColorDim(n))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

/// `{m} = q^{m/2} − q^{−m/2}`.
pub fn qnum(m: i64, q: QExponent) -> Complex64 {
    let x = m as f64 / 2.0;
    q.pow(x) - q.pow(-x)
}

/// `{m}! = {1}{2}⋯{m}`, with `{0}! = 1`.
pub fn qfact(m: i64, q: QExponent) -> Result<Complex64> {
    if m < 0 {
        return Err(Error::InvalidArgument("q-factorial of a negative integer"));
    }
    Ok((1..=m).map(|t| qnum(t, q)).product())
}

/// Balanced q-binomials `[n; k] = {n}! / ({k}! {n−k}!)` for `0 ≤ k ≤ n < size`.
///
/// Built from the recursion `[n;k] = q^{k/2}[n−1;k] + q^{−(n−k)/2}[n−1;k−1]`,
/// which involves no division and therefore stays finite where some `{m}`
/// vanish (q = 1 or small roots of unity).
#[derive(Debug, Clone)]
pub struct QBinomials {
    size: usize,
    rows: Vec<Complex64>,
}

impl QBinomials {
    pub fn new(size: usize, q: QExponent) -> Self {
        let mut rows = alloc::vec![Complex64::new(0.0, 0.0); size * size];
        let half: Vec<Complex64> = (0..size).map(|k| q.pow(k as f64 / 2.0)).collect();
        let neg_half: Vec<Complex64> = (0..size).map(|k| q.pow(-(k as f64) / 2.0)).collect();
        for n in 0..size {
            rows[n * size] = Complex64::new(1.0, 0.0);
            for k in 1..=n {
                let left = if k < n { rows[(n - 1) * size + k] } else { Complex64::new(0.0, 0.0) };
                let right = rows[(n - 1) * size + k - 1];
                rows[n * size + k] = half[k] * left + neg_half[n - k] * right;
            }
        }
        QBinomials { size, rows }
    }

    /// `[n; k]`, zero when `k > n`.
    pub fn get(&self, n: usize, k: usize) -> Complex64 {
        assert!(n < self.size, "q-binomial row {n} beyond table size {}", self.size);
        if k > n {
            Complex64::new(0.0, 0.0)
        } else {
            self.rows[n * self.size + k]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * (1.0 + b.norm())
    }

    #[test]
    fn qnum_values() {
        let q = QExponent::new(Complex64::new(0.3, 0.4)).unwrap();
        assert_eq!(qnum(0, q), Complex64::new(0.0, 0.0));
        let xi4 = QExponent::root_of_unity(4).unwrap();
        assert!(close(qnum(2, xi4), Complex64::new(0.0, 2.0), 1e-15));
        assert!(close(qnum(-3, q), -qnum(3, q), 1e-15));
    }

    #[test]
    fn qfact_values() {
        let q = QExponent::new(Complex64::new(-0.2, 1.1)).unwrap();
        assert_eq!(qfact(0, q).unwrap(), Complex64::new(1.0, 0.0));
        assert!(close(qfact(3, q).unwrap(), qnum(1, q) * qnum(2, q) * qnum(3, q), 1e-15));
        assert!(qfact(-1, q).is_err());
    }

    #[test]
    fn binomials_match_factorial_ratio() {
        let q = QExponent::new(Complex64::new(0.17, 0.61)).unwrap();
        let table = QBinomials::new(9, q);
        for n in 0..9i64 {
            for k in 0..=n {
                let direct = qfact(n, q).unwrap() / (qfact(k, q).unwrap() * qfact(n - k, q).unwrap());
                assert!(close(table.get(n as usize, k as usize), direct, 1e-12), "n={n} k={k}");
            }
        }
        assert_eq!(table.get(3, 5), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn binomials_at_q_one_are_ordinary() {
        let table = QBinomials::new(7, QExponent::new(Complex64::new(0.0, 0.0)).unwrap());
        assert!(close(table.get(6, 3), Complex64::new(20.0, 0.0), 1e-15));
        assert!(close(table.get(5, 2), Complex64::new(10.0, 0.0), 1e-15));
    }

    #[test]
    fn special_points() {
        let xi = QExponent::root_of_unity(5).unwrap();
        assert!(qnum(5, xi).norm() < 1e-14);
        let d = QExponent::deformed(Complex64::new(0.0, 0.0), 5).unwrap();
        assert!((d.h() - xi.h()).norm() < 1e-16);
        assert!(ColorDim::new(0).is_err());
        assert!(QExponent::new(Complex64::new(f64::NAN, 0.0)).is_err());
    }
}
