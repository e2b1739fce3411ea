use alloc::vec::Vec;

use num_complex::Complex64;

use super::{quantum_dimension_vanishes, InvariantValue, Method};
use crate::logc::LogComplex;
use crate::tensorq::{qnum, ColorDim, QExponent};
use crate::{Error, Result};

/// The double sum over `0 ≤ j ≤ i ≤ N−1` produced by the state-sum
/// labeling of the figure-eight diagram.
pub fn fig8_double_sum(n: ColorDim, q: QExponent) -> Complex64 {
    let nn = n.get() as i64;
    let mut fact = Vec::with_capacity(n.get());
    fact.push(Complex64::new(1.0, 0.0));
    for m in 1..nn {
        let prev = fact[(m - 1) as usize];
        fact.push(prev * qnum(m, q));
    }
    let f = |m: i64| fact[m as usize];
    let mut total = Complex64::new(0.0, 0.0);
    for i in 0..nn {
        for j in 0..=i {
            let sign = if (nn - 1 + i) % 2 == 0 { 1.0 } else { -1.0 };
            let num = f(nn - 1) * f(i) * f(nn - 1 - j);
            let den = f(j) * f(j) * f(i - j) * f(nn - 1 - i);
            let e = -i - i * i - 2 * i * j - 2 * j * j + 3 * nn + 6 * nn * i + 2 * nn * j - 3 * nn * nn;
            total += num / den * q.pow(e as f64 / 4.0) * sign;
        }
    }
    total
}

/// `Σ_{j=0}^{N−1} Π_{k=1}^{j} {N−k}{N+k}`, summed with a running product.
pub fn fig8_product(n: ColorDim, q: QExponent) -> Complex64 {
    let nn = n.get() as i64;
    let mut term = Complex64::new(1.0, 0.0);
    let mut total = term;
    for k in 1..nn {
        term *= qnum(nn - k, q) * qnum(nn + k, q);
        total += term;
    }
    total
}

/// [`fig8_product`] in log space, for colors where the value overflows.
pub fn fig8_product_log(n: ColorDim, q: QExponent) -> LogComplex {
    let nn = n.get() as i64;
    let mut term = LogComplex::ONE;
    let mut terms = Vec::with_capacity(n.get());
    terms.push(term);
    for k in 1..nn {
        let factor = LogComplex::from_complex(qnum(nn - k, q)) * LogComplex::from_complex(qnum(nn + k, q));
        term = term * factor;
        terms.push(term);
    }
    LogComplex::sum(terms.iter().copied())
}

/// `(1/{N}) Σ_{k=0}^{N−1} {N+k}!/{N−1−k}!`.
///
/// Each ratio is the product `{N−k}{N−k+1}⋯{N+k}`, built incrementally.
/// Fails where `{N}` vanishes.
pub fn fig8_single_sum(n: ColorDim, q: QExponent) -> Result<Complex64> {
    if quantum_dimension_vanishes(n, q) {
        return Err(Error::VanishingQuantumDimension);
    }
    let nn = n.get() as i64;
    let mut term = qnum(nn, q);
    let mut total = term;
    for k in 1..nn {
        term *= qnum(nn - k, q) * qnum(nn + k, q);
        total += term;
    }
    Ok(total / qnum(nn, q))
}

/// One of the figure-eight closed forms, tagged with its method.
pub fn fig8_closed_form(method: Method, n: ColorDim, q: QExponent) -> Result<InvariantValue> {
    let value = match method {
        Method::Fig8DoubleSum => fig8_double_sum(n, q),
        Method::Fig8Product => fig8_product(n, q),
        Method::Fig8SingleSum => fig8_single_sum(n, q)?,
        Method::StateSum | Method::TangleScalar => {
            return Err(Error::InvalidArgument("not a figure-eight closed form"))
        }
    };
    Ok(InvariantValue { value, n, q, method })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dim(d: usize) -> ColorDim {
        ColorDim::new(d).unwrap()
    }

    #[test]
    fn small_colors_at_roots_of_unity() {
        let xi2 = QExponent::root_of_unity(2).unwrap();
        let xi3 = QExponent::root_of_unity(3).unwrap();
        assert!((fig8_product(dim(2), xi2) - 5.0).norm() < 1e-13);
        assert!((fig8_product(dim(3), xi3) - 13.0).norm() < 1e-12);
        assert!((fig8_double_sum(dim(2), xi2) - 5.0).norm() < 1e-12);
        assert!((fig8_double_sum(dim(3), xi3) - 13.0).norm() < 1e-11);
        assert!(fig8_single_sum(dim(3), xi3).is_err());
    }

    #[test]
    fn color_one() {
        let q = QExponent::new(Complex64::new(0.4, 0.2)).unwrap();
        assert_eq!(fig8_product(dim(1), q), Complex64::new(1.0, 0.0));
        assert!((fig8_double_sum(dim(1), q) - 1.0).norm() < 1e-14);
        assert!((fig8_single_sum(dim(1), q).unwrap() - 1.0).norm() < 1e-14);
    }

    #[test]
    fn closed_forms_agree() {
        let q = QExponent::new(Complex64::new(-0.07, 0.52)).unwrap();
        for d in 2..=10 {
            let p = fig8_product(dim(d), q);
            let s = fig8_single_sum(dim(d), q).unwrap();
            assert!((p - s).norm() <= 1e-9 * p.norm(), "N={d}");
            if d <= 8 {
                let ds = fig8_double_sum(dim(d), q);
                assert!((p - ds).norm() <= 1e-9 * p.norm(), "N={d}");
            }
            let l = fig8_product_log(dim(d), q).to_complex();
            assert!((p - l).norm() <= 1e-12 * p.norm(), "N={d}");
        }
    }

    #[test]
    fn kashaev_values_are_positive() {
        for d in 2..=50 {
            let v = fig8_product(dim(d), QExponent::root_of_unity(d).unwrap());
            assert!(v.re > 0.0 && v.im.abs() < 1e-9 * v.re, "N={d}: {v}");
        }
    }

    #[test]
    fn log_form_survives_large_colors() {
        let n = 10_000;
        let v = fig8_product_log(dim(n), QExponent::root_of_unity(n).unwrap());
        let rate = v.ln_abs() / n as f64;
        assert!((rate - 0.3230659472).abs() < 2e-3, "{rate}");
    }

    #[test]
    fn method_tags() {
        let q = QExponent::new(Complex64::new(0.2, 0.2)).unwrap();
        let v = fig8_closed_form(Method::Fig8Product, dim(3), q).unwrap();
        assert_eq!(v.method, Method::Fig8Product);
        assert!(fig8_closed_form(Method::StateSum, dim(3), q).is_err());
    }
}
