use alloc::vec::Vec;

use num_complex::Complex64;

use super::q::{qnum, ColorDim, QBinomials, QExponent};
use crate::braid::Sign;
use crate::{Error, Result};

fn check_index(i: usize, n: usize) -> Result<()> {
    if i >= n {
        Err(Error::IndexOutOfRange { index: i, bound: n })
    } else {
        Ok(())
    }
}

/// Π_{t=1}^{m} {base + t}.
fn rising(base: i64, m: usize, q: QExponent) -> Complex64 {
    (1..=m as i64).map(|t| qnum(base + t, q)).product()
}

fn r_value(n: usize, q: QExponent, binom: &QBinomials, i: usize, j: usize, k: usize, l: usize) -> Complex64 {
    let zero = Complex64::new(0.0, 0.0);
    if i + j != k + l || l < i {
        return zero;
    }
    let m = l - i;
    let c = (n as f64 - 1.0) / 2.0;
    let (fi, fj, fm) = (i as f64, j as f64, m as f64);
    let expo = (fi - c) * (fj - c) - fm * (fi - fj) / 2.0 - fm * (fm + 1.0) / 4.0;
    binom.get(l, m) * rising(n as i64 - 1 - j as i64, m, q) * q.pow(expo)
}

fn r_inverse_value(
    n: usize,
    q: QExponent,
    binom: &QBinomials,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> Complex64 {
    let zero = Complex64::new(0.0, 0.0);
    if i + j != k + l || i < l {
        return zero;
    }
    let m = i - l;
    let c = (n as f64 - 1.0) / 2.0;
    let (fi, fj, fm) = (i as f64, j as f64, m as f64);
    let expo = -(fi - c) * (fj - c) - fm * (fi - fj) / 2.0 + fm * (fm + 1.0) / 4.0;
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    binom.get(k, m) * rising(n as i64 - 1 - i as i64, m, q) * q.pow(expo) * sign
}

/// `R^{ij}_{kl}`: the coefficient of `e_i ⊗ e_j` in `R(e_k ⊗ e_l)`.
///
/// Nonzero only when `i + j = k + l` and `l ≥ i`; with `m = l − i` it equals
/// `[l; m] · Π_{t=1}^{m} {N−1−j+t} · q^{(i−c)(j−c) − m(i−j)/2 − m(m+1)/4}`,
/// where `c = (N−1)/2`.
pub fn r_entry(n: ColorDim, q: QExponent, i: usize, j: usize, k: usize, l: usize) -> Result<Complex64> {
    let n = n.get();
    for x in [i, j, k, l] {
        check_index(x, n)?;
    }
    Ok(r_value(n, q, &QBinomials::new(n, q), i, j, k, l))
}

/// `(R⁻¹)^{ij}_{kl}`; nonzero only when `i + j = k + l` and `l ≤ i`.
pub fn r_inverse_entry(n: ColorDim, q: QExponent, i: usize, j: usize, k: usize, l: usize) -> Result<Complex64> {
    let n = n.get();
    for x in [i, j, k, l] {
        check_index(x, n)?;
    }
    Ok(r_inverse_value(n, q, &QBinomials::new(n, q), i, j, k, l))
}

/// Diagonal entry `μ^i_i = q^{(2i−N+1)/2}`.
pub fn mu_entry(n: ColorDim, q: QExponent, i: usize) -> Result<Complex64> {
    check_index(i, n.get())?;
    Ok(q.pow((2.0 * i as f64 - n.get() as f64 + 1.0) / 2.0))
}

/// One nonzero output of `R^{±1}` applied to a basis pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandEntry {
    /// Output pair packed as `i·N + j`.
    pub out: usize,
    pub value: Complex64,
}

/// All nonzero entries of `R` and `R⁻¹`, grouped by input pair `(k, l)`.
///
/// Each input pair has at most `N` outputs, so the table holds `O(N³)`
/// numbers.
#[derive(Debug, Clone)]
pub struct RMatrixTable {
    n: ColorDim,
    q: QExponent,
    forward: Vec<Vec<BandEntry>>,
    inverse: Vec<Vec<BandEntry>>,
}

impl RMatrixTable {
    pub fn new(n: ColorDim, q: QExponent) -> Self {
        let d = n.get();
        let binom = QBinomials::new(d, q);
        let mut forward = Vec::with_capacity(d * d);
        let mut inverse = Vec::with_capacity(d * d);
        for k in 0..d {
            for l in 0..d {
                let mut f = Vec::new();
                for m in 0..=l.min(d - 1 - k) {
                    let (i, j) = (l - m, k + m);
                    f.push(BandEntry { out: i * d + j, value: r_value(d, q, &binom, i, j, k, l) });
                }
                let mut g = Vec::new();
                for m in 0..=k.min(d - 1 - l) {
                    let (i, j) = (l + m, k - m);
                    g.push(BandEntry { out: i * d + j, value: r_inverse_value(d, q, &binom, i, j, k, l) });
                }
                forward.push(f);
                inverse.push(g);
            }
        }
        RMatrixTable { n, q, forward, inverse }
    }

    pub fn dim(&self) -> ColorDim {
        self.n
    }

    pub fn q(&self) -> QExponent {
        self.q
    }

    /// Nonzero outputs of `R^{±1}(e_k ⊗ e_l)`.
    pub fn band(&self, sign: Sign, k: usize, l: usize) -> &[BandEntry] {
        let idx = k * self.n.get() + l;
        match sign {
            Sign::Pos => &self.forward[idx],
            Sign::Neg => &self.inverse[idx],
        }
    }

    /// `(R^{±1})^{ij}_{kl}` looked up from the table.
    pub fn entry(&self, sign: Sign, i: usize, j: usize, k: usize, l: usize) -> Complex64 {
        let out = i * self.n.get() + j;
        self.band(sign, k, l)
            .iter()
            .find(|e| e.out == out)
            .map_or(Complex64::new(0.0, 0.0), |e| e.value)
    }

    /// The dense `N² × N²` matrix, row `i·N + j`, column `k·N + l`.
    pub fn dense(&self, sign: Sign) -> Vec<Complex64> {
        let d2 = self.n.get() * self.n.get();
        let mut m = alloc::vec![Complex64::new(0.0, 0.0); d2 * d2];
        for col in 0..d2 {
            let bands = match sign {
                Sign::Pos => &self.forward[col],
                Sign::Neg => &self.inverse[col],
            };
            for e in bands {
                m[e.out * d2 + col] = e.value;
            }
        }
        m
    }
}

/// The enhanced Yang–Baxter operator `(R, μ, a, b)` with
/// `a = q^{(N²−1)/4}` and `b = 1`.
#[derive(Debug, Clone)]
pub struct EnhancedYB {
    table: RMatrixTable,
    mu: Vec<Complex64>,
    a: Complex64,
    b: Complex64,
}

impl EnhancedYB {
    pub fn new(n: ColorDim, q: QExponent) -> Self {
        let d = n.get();
        let mu = (0..d).map(|i| q.pow((2.0 * i as f64 - d as f64 + 1.0) / 2.0)).collect();
        let a = q.pow((d as f64 * d as f64 - 1.0) / 4.0);
        EnhancedYB { table: RMatrixTable::new(n, q), mu, a, b: Complex64::new(1.0, 0.0) }
    }

    pub fn table(&self) -> &RMatrixTable {
        &self.table
    }

    pub fn mu(&self) -> &[Complex64] {
        &self.mu
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    pub fn dim(&self) -> ColorDim {
        self.table.dim()
    }

    pub fn q(&self) -> QExponent {
        self.table.q()
    }
}
