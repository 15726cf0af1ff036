//! Convexity witnesses: the Hessian of `g(x, y) = 1/(xy)` and the rotated
//! hyperbola for the two-variable case.

use nalgebra::Matrix2;

use crate::error::{Error, Result};

/// `g(x, y) = (xy)⁻¹`, whose graph over the open first quadrant is the
/// surface `xyz = 1`.
pub fn g(x: f64, y: f64) -> f64 {
    1.0 / (x * y)
}

/// Closed-form Hessian of `g`:
/// `[[2/(x³y), 1/(x²y²)], [1/(x²y²), 2/(xy³)]]`.
pub fn hessian_of_g(x: f64, y: f64) -> Result<Matrix2<f64>> {
    for (index, value) in [x, y].into_iter().enumerate() {
        if !(value > 0.0) || !value.is_finite() {
            return Err(Error::NonpositiveEntry { index, value });
        }
    }
    let gxx = 2.0 / (x * x * x * y);
    let gxy = 1.0 / (x * x * y * y);
    let gyy = 2.0 / (x * y * y * y);
    Ok(Matrix2::new(gxx, gxy, gxy, gyy))
}

/// Relative guard band applied to the leading principal minors.
pub const PD_GUARD: f64 = 1e-14;

/// Leading principal minors `(m₁₁, det m)`.
pub fn leading_minors(m: &Matrix2<f64>) -> (f64, f64) {
    (m[(0, 0)], m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)])
}

/// Sylvester's criterion for a symmetric 2×2 matrix: both leading
/// principal minors strictly positive.
///
/// With `s = max |mᵢⱼ|`, requires `m₁₁ > 1e-14·s` and `det m > 1e-14·s²`, so
/// the guard band scales with the matrix.
pub fn is_positive_definite(m: &Matrix2<f64>) -> Result<bool> {
    let scale = m.amax();
    let (a, b) = (m[(0, 1)], m[(1, 0)]);
    if !scale.is_finite() {
        return Err(Error::NonFinite);
    }
    if (a - b).abs() > 1e-12 * scale.max(1.0) {
        return Err(Error::AsymmetricInput(a, b));
    }
    let (m11, det) = leading_minors(m);
    Ok(m11 > PD_GUARD * scale && det > PD_GUARD * scale * scale)
}

/// `e₁′ = (1, −1)/√2` spans the line `x + y = 0`; `e₂′ = (1, 1)/√2` is the
/// gradient direction of `x + y`.
pub fn rotated_axes() -> ([f64; 2], [f64; 2]) {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    ([r, -r], [r, r])
}

/// `y′ = √(1 + x′²)`.
pub fn hyperbola_height(xp: f64) -> f64 {
    1.0_f64.hypot(xp)
}

/// Standard coordinates of `(x′, √(1 + x′²))` in the rotated frame. The
/// result satisfies `xy = (y′² − x′²)/2 = 1/2`.
pub fn hyperbola_point(xp: f64) -> [f64; 2] {
    let h = hyperbola_height(xp);
    let (e1, e2) = rotated_axes();
    [xp * e1[0] + h * e2[0], xp * e1[1] + h * e2[1]]
}

/// [`hyperbola_point`] scaled by `√2`, which lands on `xy = 1`.
pub fn hyperbola_point_on_unit_curve(xp: f64) -> [f64; 2] {
    let h = hyperbola_height(xp);
    [h + xp, h - xp]
}
