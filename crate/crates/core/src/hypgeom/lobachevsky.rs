use core::f64::consts::PI;

use crate::real;

/// `ζ(2n) / (n (2n+1) (2π)^{2n})` for n = 1, 2, …
#[allow(clippy::excessive_precision)]
const CLAUSEN_COEFFS: [f64; 26] = [
    1.38888888888888889e-2,
    6.94444444444444444e-5,
    7.87351977828168304e-7,
    1.14822163433274544e-8,
    1.89788699889709991e-10,
    3.38730137095352127e-12,
    6.3726364431831804e-14,
    1.24620599129506723e-15,
    2.51054446089995455e-17,
    5.17825880609062351e-19,
    1.08873573683008488e-20,
    2.32574411430208722e-22,
    5.03519521314738956e-24,
    1.10264992943812153e-25,
    2.43865855090073447e-27,
    5.44014267885625232e-29,
    1.22283401312173521e-30,
    2.76726346896795058e-32,
    6.30009059183201395e-34,
    1.44208683884184752e-35,
    3.3170939991595428e-37,
    7.66391355792065789e-39,
    1.77787147338306579e-40,
    4.13960589823413734e-42,
    9.67155703608110179e-44,
    2.26671870167661237e-45,
];

/// Clausen's function `Cl₂(x) = Σ sin(nx)/n² = −∫₀^x log|2 sin(t/2)| dt`.
pub fn clausen2(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    // Reduce to [−π, π]; the expansion below converges there.
    let x = real::rem_euclid(x + PI, 2.0 * PI) - PI;
    if x == 0.0 {
        return 0.0;
    }
    let x2 = x * x;
    let mut power = x * x2;
    let mut series = 0.0;
    for c in CLAUSEN_COEFFS {
        series += c * power;
        power *= x2;
    }
    x - x * real::ln(real::abs(x)) + series
}

/// The Lobachevsky function `Λ(θ) = −∫₀^θ log|2 sin t| dt = ½ Cl₂(2θ)`.
///
/// Odd and π-periodic.
pub fn lobachevsky(theta: f64) -> f64 {
    0.5 * clausen2(2.0 * theta)
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;

    const LAMBDA_PI_3: f64 = 0.33831386880321787501;

    #[test]
    fn special_values() {
        assert_eq!(lobachevsky(0.0), 0.0);
        assert!(lobachevsky(PI).abs() < 1e-15);
        assert!(lobachevsky(PI / 2.0).abs() < 1e-15);
        assert!((lobachevsky(PI / 3.0) - LAMBDA_PI_3).abs() < 1e-15);
        assert!((lobachevsky(5.0 * PI / 6.0) + 1.5 * LAMBDA_PI_3).abs() < 1e-14);
        assert!((lobachevsky(1.0) - 0.36357302543163962371).abs() < 1e-15);
        assert!((lobachevsky(2.5) + 0.49641006627347835935).abs() < 1e-15);
    }

    #[test]
    fn clausen_matches_slow_series() {
        // Truncated Fourier sum; the tail is bounded by 1/terms.
        for x in [0.3, 1.0, 2.0, 3.0] {
            let terms = 20_000;
            let mut s = 0.0;
            for n in 1..=terms {
                let n = n as f64;
                s += (n * x).sin() / (n * n);
            }
            assert!((clausen2(x) - s).abs() < 1e-7, "x={x}");
        }
    }

    #[test]
    fn symmetries() {
        for i in 0..200 {
            let t = -10.0 + 0.1 * i as f64 + 0.0123;
            assert!((lobachevsky(t) + lobachevsky(-t)).abs() < 1e-13);
            assert!((lobachevsky(t + PI) - lobachevsky(t)).abs() < 1e-13);
        }
        assert!(clausen2(f64::INFINITY).is_nan());
    }
}
