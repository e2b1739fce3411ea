use num_complex::Complex64;

use super::{quantum_dimension_vanishes, InvariantValue, Method};
use crate::braid::BraidWord;
use crate::tensorq::{braid_diagonal, qnum, ColorDim, EnhancedYB, QExponent};
use crate::{Error, Result};

/// `μ_J = Π_legs μ_{j_leg}` for every `J` of the given rank, in flat order.
fn mu_weights(mu: &[Complex64], rank: usize) -> impl Iterator<Item = Complex64> + '_ {
    let d = mu.len();
    let size = d.pow(rank as u32);
    (0..size).map(move |mut idx| {
        let mut w = Complex64::new(1.0, 0.0);
        for _ in 0..rank {
            w *= mu[idx % d];
            idx /= d;
        }
        w
    })
}

/// `T(β) = a^{−w(β)} b^{−n} Tr(Φ(β) μ^{⊗n})` with `a = q^{(N²−1)/4}`, `b = 1`.
pub fn trace_invariant(b: &BraidWord, n: ColorDim, q: QExponent) -> Result<Complex64> {
    let e = EnhancedYB::new(n, q);
    let diag = braid_diagonal(b, e.table(), None)?;
    let tr: Complex64 = diag.iter().zip(mu_weights(e.mu(), b.strands())).map(|(x, w)| x * w).sum();
    let scale = e.a().powi(-b.writhe() as i32) * e.b().powi(-(b.strands() as i32));
    Ok(scale * tr)
}

/// `J_N(L; q) = T(β) · {1}/{N}` for the closure `L` of `β`.
///
/// Fails with [`Error::VanishingQuantumDimension`] where `{N} = 0`, e.g. at
/// `q = ξ_N`; use [`tangle_scalar`] there.
pub fn colored_jones(b: &BraidWord, n: ColorDim, q: QExponent) -> Result<InvariantValue> {
    if quantum_dimension_vanishes(n, q) {
        return Err(Error::VanishingQuantumDimension);
    }
    let t = trace_invariant(b, n, q)?;
    let value = t * qnum(1, q) / qnum(n.get() as i64, q);
    Ok(InvariantValue { value, n, q, method: Method::StateSum })
}

/// `J_N` of a knot from the (1,1)-tangle obtained by leaving the first
/// strand of the closure open.
///
/// The partial trace over strands `2..n` is a scalar multiple `S·Id_V`;
/// the scalar is read off at the highest-weight basis vector of the open
/// strand and returned as `a^{−w(β)} S`.
pub fn tangle_scalar(b: &BraidWord, n: ColorDim, q: QExponent) -> Result<InvariantValue> {
    let components = b.components();
    if components != 1 {
        return Err(Error::NotAKnot { components });
    }
    let e = EnhancedYB::new(n, q);
    let top = n.get() - 1;
    let diag = braid_diagonal(b, e.table(), Some(top))?;
    let s: Complex64 = diag
        .iter()
        .zip(mu_weights(e.mu(), b.strands() - 1))
        .map(|(x, w)| x * w)
        .sum();
    let value = e.a().powi(-b.writhe() as i32) * s;
    Ok(InvariantValue { value, n, q, method: Method::TangleScalar })
}

/// Kashaev's invariant `⟨K⟩_N = J_N(K; e^{2πi/N})`.
pub fn kashaev(b: &BraidWord, n: ColorDim) -> Result<Complex64> {
    let q = QExponent::root_of_unity(n.get())?;
    Ok(tangle_scalar(b, n, q)?.value)
}

/// `|q J₂(L₊) − q⁻¹ J₂(L₋) − (q^{1/2} − q^{−1/2}) J₂(L₀)|`.
///
/// The three braids are expected to differ at a single crossing.
pub fn skein_residual_n2(plus: &BraidWord, minus: &BraidWord, zero: &BraidWord, q: QExponent) -> Result<f64> {
    let n = ColorDim::new(2)?;
    let jp = colored_jones(plus, n, q)?.value;
    let jm = colored_jones(minus, n, q)?.value;
    let j0 = colored_jones(zero, n, q)?.value;
    Ok((q.q() * jp - jm / q.q() - qnum(1, q) * j0).norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;
    use crate::invariants::fig8_product;

    fn qe(re: f64, im: f64) -> QExponent {
        QExponent::new(Complex64::new(re, im)).unwrap()
    }

    fn dim(d: usize) -> ColorDim {
        ColorDim::new(d).unwrap()
    }

    #[test]
    fn identity_trace_is_quantum_dimension() {
        let q = qe(0.2, 0.6);
        let id = BraidWord::identity(1).unwrap();
        for d in 1..7 {
            let t = trace_invariant(&id, dim(d), q).unwrap();
            let expected = qnum(d as i64, q) / qnum(1, q);
            assert!((t - expected).norm() < 1e-12 * expected.norm());
        }
    }

    #[test]
    fn unknot_is_one() {
        let q = qe(-0.1, 0.9);
        for text in ["1", "1 2", "-1 -2 -3"] {
            let b = parse_braid(text, None).unwrap();
            for d in 1..6 {
                let j = colored_jones(&b, dim(d), q).unwrap().value;
                assert!((j - 1.0).norm() < 1e-12, "{text} N={d}: {j}");
                let s = tangle_scalar(&b, dim(d), q).unwrap().value;
                assert!((s - 1.0).norm() < 1e-12, "{text} N={d}: {s}");
            }
        }
    }

    #[test]
    fn color_one_is_trivial() {
        let q = qe(0.3, 0.3);
        for text in ["1 -2 1 -2", "1 1 1", "1 1"] {
            let b = parse_braid(text, None).unwrap();
            assert!((colored_jones(&b, dim(1), q).unwrap().value - 1.0).norm() < 1e-14);
        }
    }

    #[test]
    fn figure_eight_trace_matches_product() {
        let q = qe(0.11, 0.37);
        let b = parse_braid("1 -2 1 -2", None).unwrap();
        for d in 2..=5 {
            let j = colored_jones(&b, dim(d), q).unwrap().value;
            let t = tangle_scalar(&b, dim(d), q).unwrap().value;
            let p = fig8_product(dim(d), q);
            assert!((j - p).norm() < 1e-9 * p.norm(), "N={d}");
            assert!((t - p).norm() < 1e-9 * p.norm(), "N={d}");
        }
    }

    #[test]
    fn kashaev_figure_eight() {
        let b = parse_braid("1 -2 1 -2", None).unwrap();
        assert!((kashaev(&b, dim(2)).unwrap() - 5.0).norm() < 1e-10);
        assert!((kashaev(&b, dim(3)).unwrap() - 13.0).norm() < 1e-10);
        let unknot = parse_braid("1", None).unwrap();
        for d in 2..6 {
            assert!((kashaev(&unknot, dim(d)).unwrap() - 1.0).norm() < 1e-12);
        }
    }

    #[test]
    fn root_of_unity_rejects_full_trace() {
        let b = parse_braid("1 -2 1 -2", None).unwrap();
        let xi = QExponent::root_of_unity(3).unwrap();
        assert_eq!(colored_jones(&b, dim(3), xi), Err(Error::VanishingQuantumDimension));
    }

    #[test]
    fn links_are_not_tangles() {
        let hopf = parse_braid("1 1", None).unwrap();
        assert_eq!(
            tangle_scalar(&hopf, dim(2), qe(0.1, 0.2)),
            Err(Error::NotAKnot { components: 2 })
        );
    }

    #[test]
    fn skein_triples() {
        let q = qe(0.15, 0.45);
        let t = parse_braid("1 1 1", None).unwrap();
        let u = parse_braid("1", None).unwrap();
        let h = parse_braid("1 1", None).unwrap();
        assert!(skein_residual_n2(&t, &u, &h, q).unwrap() < 1e-10);
        let um = parse_braid("-1", None).unwrap();
        let id2 = BraidWord::identity(2).unwrap();
        assert!(skein_residual_n2(&u, &um, &id2, q).unwrap() < 1e-12);
    }
}
