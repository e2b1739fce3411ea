use core::f64::consts::PI;

use crate::{real, Error, Result};

/// `f(N; k) = 4 sin²(kπ/N)` for `0 ≤ k ≤ N`.
///
/// At `q = ξ_N` the factor `{N−k}{N+k}` of the figure-eight sum equals this.
pub fn growth_factor(n: usize, k: usize) -> Result<f64> {
    if n == 0 || k > n {
        return Err(Error::IndexOutOfRange { index: k, bound: n + 1 });
    }
    let s = real::sin(k as f64 * PI / n as f64);
    Ok(4.0 * s * s)
}

/// `log g(N; j) = Σ_{k=1}^{j} log f(N; k)` for `0 ≤ j ≤ N−1`.
pub fn growth_partial_log(n: usize, j: usize) -> Result<f64> {
    if n == 0 || j >= n {
        return Err(Error::IndexOutOfRange { index: j, bound: n });
    }
    let mut acc = 0.0;
    for k in 1..=j {
        acc += real::ln(growth_factor(n, k)?);
    }
    Ok(acc)
}

/// `g(N; j) = Π_{k=1}^{j} f(N; k)`; overflows to infinity for large `N`.
pub fn growth_partial(n: usize, j: usize) -> Result<f64> {
    Ok(real::exp(growth_partial_log(n, j)?))
}

/// The `j` maximizing `g(N; j)`.
///
/// When several `j` agree to within a relative 1e−12 (as happens at
/// `j = 5N/6`, where `f = 1`), the largest one is returned.
pub fn growth_argmax(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be positive"));
    }
    let mut best = 0;
    let mut best_log = 0.0;
    let mut acc = 0.0;
    for j in 1..n {
        acc += real::ln(growth_factor(n, j)?);
        if acc >= best_log - 1e-12 * real::abs(best_log).max(1.0) {
            if acc > best_log {
                best_log = acc;
            }
            best = j;
        }
    }
    Ok(best)
}
