use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::braid::BraidWord;
use crate::invariants::{fig8_product_log, tangle_scalar};
use crate::logc::LogComplex;
use crate::tensorq::{ColorDim, QExponent};
use crate::{real, Error, Result};

/// Something that evaluates `J_N(K; ξ_N)` for a fixed knot `K`.
pub trait KnotEvaluator {
    /// `J_N(K; e^{2πi/N})` in log form.
    fn kashaev_log(&self, n: ColorDim) -> Result<LogComplex>;
}

/// The figure-eight knot through its `O(N)` product formula.
#[derive(Debug, Clone, Copy, Default)]
pub struct Fig8Closed;

impl KnotEvaluator for Fig8Closed {
    fn kashaev_log(&self, n: ColorDim) -> Result<LogComplex> {
        Ok(fig8_product_log(n, QExponent::root_of_unity(n.get())?))
    }
}

/// Any knot given as a braid closure, through the (1,1)-tangle state sum.
#[derive(Debug, Clone)]
pub struct BraidKnot(pub BraidWord);

impl KnotEvaluator for BraidKnot {
    fn kashaev_log(&self, n: ColorDim) -> Result<LogComplex> {
        let q = QExponent::root_of_unity(n.get())?;
        Ok(LogComplex::from_complex(tangle_scalar(&self.0, n, q)?.value))
    }
}

/// Points `(N, 2π log|J_N(ξ_N)| / N)`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct LimitSeries {
    pub entries: Vec<(usize, f64)>,
    /// Colors at which `J_N(ξ_N)` vanished and no point was recorded.
    pub gaps: Vec<usize>,
}

/// Evaluates the volume-conjecture sequence at each `N` in `ns`, which must
/// be strictly increasing.
pub fn volume_limit_series<E: KnotEvaluator + ?Sized>(eval: &E, ns: &[usize]) -> Result<LimitSeries> {
    if ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("colors must be strictly increasing"));
    }
    let mut series = LimitSeries::default();
    for &n in ns {
        let j = eval.kashaev_log(ColorDim::new(n)?)?;
        if j.is_zero() {
            series.gaps.push(n);
        } else {
            series.entries.push((n, 2.0 * PI * j.ln_abs() / n as f64));
        }
    }
    Ok(series)
}

/// Least-squares fit of `a + b·log N / N + c / N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitResult {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// Root-mean-square residual over the window.
    pub rms: f64,
    /// Smallest and largest `N` used.
    pub window: (usize, usize),
    pub points: usize,
}

/// Fits the series restricted to `window` (inclusive). Without a window the
/// top decade `[N_max / 10, N_max]` is used.
///
/// Solved by Householder QR on the `m × 3` design matrix.
pub fn fit_limit(series: &LimitSeries, window: Option<(usize, usize)>) -> Result<FitResult> {
    let n_max = series.entries.iter().map(|e| e.0).max().unwrap_or(0);
    let (lo, hi) = window.unwrap_or((n_max / 10, n_max));
    let pts: Vec<(f64, f64)> = series
        .entries
        .iter()
        .filter(|e| e.0 >= lo && e.0 <= hi)
        .map(|&(n, v)| (n as f64, v))
        .collect();
    if pts.len() < 3 {
        return Err(Error::Singular("fewer than three points in the fit window"));
    }
    let m = pts.len();
    // Column-major design matrix and right-hand side.
    let mut cols: [Vec<f64>; 3] = [
        pts.iter().map(|_| 1.0).collect(),
        pts.iter().map(|&(n, _)| real::ln(n) / n).collect(),
        pts.iter().map(|&(n, _)| 1.0 / n).collect(),
    ];
    let mut rhs: Vec<f64> = pts.iter().map(|p| p.1).collect();
    let scale = cols.iter().map(|c| norm(c)).fold(0.0, f64::max);

    for k in 0..3 {
        let alpha = {
            let nk = norm(&cols[k][k..]);
            if cols[k][k] > 0.0 {
                -nk
            } else {
                nk
            }
        };
        if real::abs(alpha) <= 1e-13 * scale {
            return Err(Error::Singular("rank-deficient fit window"));
        }
        let mut v: Vec<f64> = cols[k][k..].to_vec();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|x| x * x).sum();
        for col in cols.iter_mut().skip(k) {
            reflect(&mut col[k..], &v, vnorm2);
        }
        reflect(&mut rhs[k..], &v, vnorm2);
    }
    let mut coef = [0.0; 3];
    for k in (0..3).rev() {
        let mut s = rhs[k];
        for (j, c) in coef.iter().enumerate().skip(k + 1) {
            s -= cols[j][k] * c;
        }
        coef[k] = s / cols[k][k];
    }
    let resid2: f64 = rhs[3..].iter().map(|x| x * x).sum();
    let n_lo = pts.iter().map(|p| p.0).fold(f64::INFINITY, f64::min) as usize;
    let n_hi = pts.iter().map(|p| p.0).fold(0.0, f64::max) as usize;
    Ok(FitResult {
        a: coef[0],
        b: coef[1],
        c: coef[2],
        rms: real::sqrt(resid2 / m as f64),
        window: (n_lo, n_hi),
        points: m,
    })
}

fn norm(x: &[f64]) -> f64 {
    real::sqrt(x.iter().map(|v| v * v).sum())
}

/// `x ← (I − 2 v vᵀ / |v|²) x`.
fn reflect(x: &mut [f64], v: &[f64], vnorm2: f64) {
    let dot: f64 = x.iter().zip(v).map(|(a, b)| a * b).sum();
    let f = 2.0 * dot / vnorm2;
    for (xi, vi) in x.iter_mut().zip(v) {
        *xi -= f * vi;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;

    fn synthetic(a: f64, b: f64, c: f64, ns: impl Iterator<Item = usize>) -> LimitSeries {
        LimitSeries {
            entries: ns.map(|n| (n, a + b * (n as f64).ln() / n as f64 + c / n as f64)).collect(),
            gaps: Vec::new(),
        }
    }

    #[test]
    fn exact_model_is_recovered() {
        let s = synthetic(2.03, 9.4, -3.1, (100..=5000).step_by(50));
        let f = fit_limit(&s, Some((100, 5000))).unwrap();
        assert!((f.a - 2.03).abs() < 1e-9);
        assert!((f.b - 9.4).abs() < 1e-9);
        assert!((f.c + 3.1).abs() < 1e-9);
        assert!(f.rms < 1e-12);
        assert_eq!(f.window, (100, 5000));
    }

    #[test]
    fn constant_series() {
        let s = synthetic(1.5, 0.0, 0.0, (10..=200).step_by(10));
        let f = fit_limit(&s, None).unwrap();
        assert!((f.a - 1.5).abs() < 1e-12);
        assert!(f.b.abs() < 1e-9 && f.c.abs() < 1e-9);
        assert_eq!(f.window, (20, 200));
    }

    #[test]
    fn too_few_points() {
        let s = synthetic(1.0, 1.0, 1.0, [10, 20].into_iter());
        assert!(matches!(fit_limit(&s, None), Err(Error::Singular(_))));
        let dup = LimitSeries { entries: alloc::vec![(10, 1.0), (10, 1.0), (10, 1.0)], gaps: Vec::new() };
        assert!(matches!(fit_limit(&dup, None), Err(Error::Singular(_))));
    }

    #[test]
    fn figure_eight_first_terms() {
        let s = volume_limit_series(&Fig8Closed, &[2, 3]).unwrap();
        assert!((s.entries[0].1 - PI * 5f64.ln()).abs() < 1e-12);
        assert!((s.entries[1].1 - 2.0 * PI * 13f64.ln() / 3.0).abs() < 1e-12);
        let b = BraidKnot(parse_braid("1 -2 1 -2", None).unwrap());
        let t = volume_limit_series(&b, &[2, 3, 4]).unwrap();
        let c = volume_limit_series(&Fig8Closed, &[2, 3, 4]).unwrap();
        for (x, y) in t.entries.iter().zip(&c.entries) {
            assert!((x.1 - y.1).abs() < 1e-10);
        }
        assert!(volume_limit_series(&Fig8Closed, &[3, 2]).is_err());
    }

    #[test]
    fn unknot_gives_zero_rate() {
        let b = BraidKnot(parse_braid("1", None).unwrap());
        let s = volume_limit_series(&b, &[2, 3, 5]).unwrap();
        assert!(s.entries.iter().all(|e| e.1.abs() < 1e-12));
    }
}
