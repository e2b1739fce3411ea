use core::f64::consts::PI;

use num_complex::Complex64;

use crate::{Error, Result};

/// `B_{2k} / (2k+1)!` for k = 1, 2, …
#[allow(clippy::excessive_precision)]
const BERNOULLI: [f64; 22] = [
    2.77777777777777778e-2,
    -2.77777777777777778e-4,
    4.72411186696900983e-6,
    -9.18577307466196355e-8,
    1.89788699889709991e-9,
    -4.06476164514422553e-11,
    8.92169102045645256e-13,
    -1.99392958607210757e-14,
    4.51898002961991819e-16,
    -1.0356517612181247e-17,
    2.39521862102618675e-19,
    -5.58178587432500934e-21,
    1.30915075541832129e-22,
    -3.08741980242674029e-24,
    7.31597565270220342e-26,
    -1.74084565723400074e-27,
    4.15763564461389972e-29,
    -9.9621484882846221e-31,
    2.3940344248961653e-32,
    -5.76834735536739008e-34,
    1.39317947964700798e-35,
    -3.37212196548508947e-37,
];

const ZETA2: f64 = PI * PI / 6.0;

/// Series in `u = −log(1−z)`; converges fast for `|z| ≤ 1`, `Re z ≤ ½`.
fn bernoulli_series(z: Complex64) -> Complex64 {
    let u = -(Complex64::new(1.0, 0.0) - z).ln();
    let u2 = u * u;
    let mut power = u * u2;
    let mut sum = u - u2 * 0.25;
    for b in BERNOULLI {
        sum += power * b;
        power *= u2;
    }
    sum
}

/// The principal branch of the dilogarithm `Li₂(z) = −∫₀^z log(1−y)/y dy`.
///
/// Defined on `ℂ \ (1, ∞)`; real arguments greater than one lie on the
/// branch cut and are rejected.
pub fn dilog(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::InvalidArgument("dilogarithm argument must be finite"));
    }
    if z.im == 0.0 && z.re >= 1.0 {
        return if z.re == 1.0 { Ok(Complex64::new(ZETA2, 0.0)) } else { Err(Error::BranchCut) };
    }
    if z == Complex64::new(0.0, 0.0) {
        return Ok(z);
    }
    if z.norm_sqr() > 1.0 {
        // Li₂(z) + Li₂(1/z) = −π²/6 − ½ log²(−z)
        let l = (-z).ln();
        return Ok(-dilog(z.inv())? - ZETA2 - l * l * 0.5);
    }
    if z.re > 0.5 {
        // Li₂(z) + Li₂(1−z) = π²/6 − log z · log(1−z)
        let w = Complex64::new(1.0, 0.0) - z;
        return Ok(-bernoulli_series(w) + ZETA2 - z.ln() * w.ln());
    }
    Ok(bernoulli_series(z))
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn taylor(z: Complex64) -> Complex64 {
        let mut s = c(0.0, 0.0);
        let mut p = z;
        for n in 1..=200 {
            s += p / (n * n) as f64;
            p *= z;
        }
        s
    }

    #[test]
    fn reference_values() {
        assert_eq!(dilog(c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
        assert!((dilog(c(1.0, 0.0)).unwrap().re - ZETA2).abs() < 1e-15);
        assert!((dilog(c(-1.0, 0.0)).unwrap() - c(-PI * PI / 12.0, 0.0)).norm() < 1e-15);
        let e = dilog(Complex64::from_polar(1.0, PI / 3.0)).unwrap();
        assert!((e - c(0.27415567780803773941, 1.014941606409653625)).norm() < 1e-14);
        let cases = [
            (c(0.3, 0.4), c(0.26659686674274041589, 0.46136289181910899428)),
            (c(-3.0, 2.0), c(-2.0713071652315143212, 0.89227316790070348577)),
            (c(2.0, 0.5), c(1.7543852608837824371, 2.2538518760902884174)),
        ];
        for (z, expected) in cases {
            assert!((dilog(z).unwrap() - expected).norm() < 1e-14, "z={z}");
        }
    }

    #[test]
    fn branch_cut_is_an_error() {
        assert_eq!(dilog(c(1.5, 0.0)), Err(Error::BranchCut));
        assert!(dilog(c(f64::NAN, 0.0)).is_err());
        // Just above the cut is fine.
        assert!(dilog(c(1.5, 1e-9)).is_ok());
    }

    #[test]
    fn taylor_agreement_in_small_disk() {
        for k in 0..40 {
            let z = Complex64::from_polar(0.5 * (k as f64 / 40.0), 0.37 * k as f64);
            assert!((dilog(z).unwrap() - taylor(z)).norm() < 1e-14);
        }
    }

    #[test]
    fn inversion_identity() {
        for k in 0..40 {
            let z = Complex64::from_polar(1.2 + 0.3 * k as f64, 0.1 + 0.15 * k as f64);
            let l = (-z).ln();
            let lhs = dilog(z).unwrap() + dilog(z.inv()).unwrap();
            assert!((lhs - (-ZETA2 - l * l * 0.5)).norm() < 1e-12, "z={z}");
        }
    }
}
