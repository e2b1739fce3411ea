use num_complex::Complex64;

use crate::invariants::fig8_product;
use crate::tensorq::{ColorDim, QExponent};
use crate::{Error, Result};

/// `Δ(E; t) = −t + 3 − t⁻¹` for the figure-eight knot `E`.
pub fn alexander_fig8(t: Complex64) -> Complex64 {
    -t + 3.0 - t.inv()
}

/// `1 / Δ(E; e^θ) = 1 / (3 − e^θ − e^{−θ})`.
pub fn alexander_target(theta: Complex64) -> Result<Complex64> {
    let d = 3.0 - theta.exp() - (-theta).exp();
    if d.norm() < 1e-14 {
        return Err(Error::Pole("3 − 2 cosh θ vanishes"));
    }
    Ok(d.inv())
}

/// `(J_N(E; e^{θ/N}), 1/Δ(E; e^θ))`; the first converges to the second as
/// `N → ∞` for small `θ`.
pub fn alexander_limit_check(theta: Complex64, n: usize) -> Result<(Complex64, Complex64)> {
    let target = alexander_target(theta)?;
    let value = fig8_product(ColorDim::new(n)?, QExponent::from_theta(theta, n)?);
    Ok((value, target))
}
