//! Residuals of the enhanced Yang–Baxter axioms at a given `(N, q)`.

use num_complex::Complex64;

use super::q::{qnum, ColorDim, QExponent};
use super::rmatrix::EnhancedYB;
use super::tensor::OperatorTensor;
use crate::braid::{parse_braid, Sign};

fn max_abs_diff(a: &OperatorTensor, b: &OperatorTensor) -> f64 {
    let mut worst: f64 = 0.0;
    for col in 0..a.size() {
        for row in 0..a.size() {
            worst = worst.max((a.get(row, col) - b.get(row, col)).norm());
        }
    }
    worst
}

/// Max-abs difference between `(R⊗Id)(Id⊗R)(R⊗Id)` and `(Id⊗R)(R⊗Id)(Id⊗R)`.
pub fn verify_yang_baxter(n: ColorDim, q: QExponent) -> f64 {
    let e = EnhancedYB::new(n, q);
    let lhs = OperatorTensor::from_braid(&parse_braid("1 2 1", None).unwrap(), e.table()).unwrap();
    let rhs = OperatorTensor::from_braid(&parse_braid("2 1 2", None).unwrap(), e.table()).unwrap();
    max_abs_diff(&lhs, &rhs)
}

/// Max-abs entry of `R^{±1}(μ⊗μ) − (μ⊗μ)R^{±1}`, over both signs.
pub fn verify_mu_commutation(n: ColorDim, q: QExponent) -> f64 {
    let e = EnhancedYB::new(n, q);
    let d = n.get();
    let mu = e.mu();
    let mut worst: f64 = 0.0;
    for sign in [Sign::Pos, Sign::Neg] {
        for k in 0..d {
            for l in 0..d {
                for b in e.table().band(sign, k, l) {
                    let (i, j) = (b.out / d, b.out % d);
                    let r = (b.value * (mu[k] * mu[l] - mu[i] * mu[j])).norm();
                    worst = worst.max(r);
                }
            }
        }
    }
    worst
}

/// Max-abs entry of `Tr_2(R^{±1}(Id⊗μ)) − a^{±1} b Id_V`, over both signs.
pub fn verify_trace_axiom(n: ColorDim, q: QExponent) -> f64 {
    let e = EnhancedYB::new(n, q);
    let d = n.get();
    let mut worst: f64 = 0.0;
    for (sign, target) in [(Sign::Pos, e.a() * e.b()), (Sign::Neg, e.b() / e.a())] {
        let op = OperatorTensor::identity(2, d)
            .unwrap()
            .apply_crossing(1, sign, e.table())
            .unwrap()
            .partial_trace_last(Some(e.mu()))
            .unwrap();
        for col in 0..d {
            for row in 0..d {
                let expected = if row == col { target } else { Complex64::new(0.0, 0.0) };
                worst = worst.max((op.get(row, col) - expected).norm());
            }
        }
    }
    worst
}

/// Max-abs entry of `R R⁻¹ − Id` on `V ⊗ V`.
pub fn verify_inverse(n: ColorDim, q: QExponent) -> f64 {
    let e = EnhancedYB::new(n, q);
    let prod = OperatorTensor::identity(2, n.get())
        .unwrap()
        .apply_crossing(1, Sign::Neg, e.table())
        .unwrap()
        .apply_crossing(1, Sign::Pos, e.table())
        .unwrap();
    max_abs_diff(&prod, &OperatorTensor::identity(2, n.get()).unwrap())
}

/// Max-abs entry of `q^{1/4}R − q^{−1/4}R⁻¹ − (q^{1/2} − q^{−1/2}) Id` for N = 2.
pub fn skein_matrix_residual(q: QExponent) -> f64 {
    let n = ColorDim::new(2).unwrap();
    let e = EnhancedYB::new(n, q);
    let (r, ri) = (e.table().dense(Sign::Pos), e.table().dense(Sign::Neg));
    let (qp, qm, one) = (q.pow(0.25), q.pow(-0.25), qnum(1, q));
    let mut worst: f64 = 0.0;
    for row in 0..4 {
        for col in 0..4 {
            let id = if row == col { one } else { Complex64::new(0.0, 0.0) };
            worst = worst.max((qp * r[row * 4 + col] - qm * ri[row * 4 + col] - id).norm());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qe(re: f64, im: f64) -> QExponent {
        QExponent::new(Complex64::new(re, im)).unwrap()
    }

    fn dim(d: usize) -> ColorDim {
        ColorDim::new(d).unwrap()
    }

    #[test]
    fn trivial_color_is_exact() {
        let q = qe(0.7, -0.2);
        assert_eq!(verify_yang_baxter(dim(1), q), 0.0);
        assert_eq!(verify_mu_commutation(dim(1), q), 0.0);
    }

    #[test]
    fn unit_circle_n2() {
        let q = qe(0.0, 0.83);
        assert!(verify_yang_baxter(dim(2), q) <= 1e-12);
        assert!(verify_mu_commutation(dim(2), q) <= 1e-13);
        assert!(verify_trace_axiom(dim(2), q) <= 1e-12);
    }

    #[test]
    fn generic_higher_colors() {
        let q = qe(0.18, 0.55);
        assert!(verify_yang_baxter(dim(5), q) <= 1e-10);
        assert!(verify_mu_commutation(dim(4), q) <= 1e-11);
        for d in 2..=5 {
            assert!(verify_trace_axiom(dim(d), q) <= 1e-10, "d={d}");
            assert!(verify_inverse(dim(d), q) <= 1e-10, "d={d}");
        }
    }

    #[test]
    fn skein_identity() {
        for h in [(0.3, 0.1), (0.0, 1.9), (-0.5, 0.7)] {
            assert!(skein_matrix_residual(qe(h.0, h.1)) <= 1e-12);
        }
    }

    #[test]
    fn roots_of_unity_stay_finite() {
        for d in 2..=6 {
            let q = QExponent::root_of_unity(d).unwrap();
            assert!(verify_yang_baxter(dim(d), q) <= 1e-10);
            assert!(verify_trace_axiom(dim(d), q) <= 1e-10);
        }
    }
}
