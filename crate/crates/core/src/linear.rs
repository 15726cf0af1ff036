//! Linear functionals, hyperplanes and gradient-aligned frames.
//!
//! A functional `f(x) = a·x` has the constant gradient `a`. Every point `P`
//! sits at a signed distance `δ(P)` from the zero level set, positive on the
//! side `a` points into, and `f(P) = |a| · δ(P)`.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Largest supported dimension.
pub const MAX_DIMENSION: usize = 4096;

pub(crate) fn check_finite(v: &[f64]) -> Result<()> {
    if v.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite)
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Euclidean norm, scaled by the largest entry so squares cannot overflow.
pub fn norm(v: &[f64]) -> f64 {
    let scale = v.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    if scale == 0.0 || !scale.is_finite() {
        return scale;
    }
    scale * v.iter().map(|x| (x / scale).powi(2)).sum::<f64>().sqrt()
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// The functional `x ↦ a·x` for a nonzero coefficient vector `a`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearFunctional {
    coeffs: Vec<f64>,
    gradient_norm: f64,
}

impl LinearFunctional {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyVector);
        }
        if coeffs.len() > MAX_DIMENSION {
            return Err(Error::DimensionTooLarge(coeffs.len()));
        }
        check_finite(&coeffs)?;
        let gradient_norm = norm(&coeffs);
        if gradient_norm == 0.0 {
            return Err(Error::ZeroGradient);
        }
        Ok(LinearFunctional {
            coeffs,
            gradient_norm,
        })
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// The gradient, which for a linear functional is the coefficient vector.
    pub fn gradient(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// `|∇f|`, the slope of the graph in the steepest direction.
    pub fn gradient_norm(&self) -> f64 {
        self.gradient_norm
    }

    /// Unit normal `∇f / |∇f|`.
    pub fn unit_normal(&self) -> Vec<f64> {
        self.coeffs.iter().map(|a| a / self.gradient_norm).collect()
    }

    pub fn evaluate(&self, point: &[f64]) -> Result<f64> {
        check_dim(self.dim(), point.len())?;
        Ok(dot(&self.coeffs, point))
    }

    /// Signed distance from `point` to the zero level set, positive on the
    /// side the gradient points into.
    pub fn signed_distance(&self, point: &[f64]) -> Result<f64> {
        Ok(self.evaluate(point)? / self.gradient_norm)
    }

    /// Multiplies every coefficient by `k`.
    pub fn scaled(&self, k: f64) -> Result<Self> {
        LinearFunctional::new(self.coeffs.iter().map(|a| a * k).collect())
    }

    pub fn level_set(&self, level: f64) -> Hyperplane {
        Hyperplane {
            functional: self.clone(),
            level,
        }
    }
}

/// The level set `{x : a·x = level}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Hyperplane {
    functional: LinearFunctional,
    level: f64,
}

impl Hyperplane {
    pub fn new(functional: LinearFunctional, level: f64) -> Result<Self> {
        if !level.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(Hyperplane { functional, level })
    }

    pub fn from_coeffs(coeffs: Vec<f64>, level: f64) -> Result<Self> {
        Hyperplane::new(LinearFunctional::new(coeffs)?, level)
    }

    pub fn functional(&self) -> &LinearFunctional {
        &self.functional
    }

    pub fn level(&self) -> f64 {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.functional.dim()
    }

    /// Signed distance from `point` to this hyperplane.
    pub fn signed_distance(&self, point: &[f64]) -> Result<f64> {
        let value = self.functional.evaluate(point)?;
        Ok((value - self.level) / self.functional.gradient_norm())
    }

    /// Closest point of the hyperplane to `point`:
    /// `Q = P − (a·P − c) a / |a|²`.
    pub fn foot_of_perpendicular(&self, point: &[f64]) -> Result<Vec<f64>> {
        let value = self.functional.evaluate(point)?;
        let a = self.functional.coeffs();
        let g = self.functional.gradient_norm();
        // Divide by |a| twice rather than by |a|² to stay in range.
        let step = (value - self.level) / g;
        Ok(point
            .iter()
            .zip(a)
            .map(|(p, ai)| p - step * (ai / g))
            .collect())
    }

    pub fn contains(&self, point: &[f64], tol: f64) -> Result<bool> {
        let value = self.functional.evaluate(point)?;
        Ok((value - self.level).abs() <= tol * self.level.abs().max(1.0))
    }
}

/// An orthonormal basis of ℝⁿ whose last column is `∇f / |∇f|`.
///
/// Coordinates in this frame are the "primed" coordinates: the first `n − 1`
/// axes span the zero level set of `f` and the last coordinate of a point is
/// its signed distance to that level set.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthoFrame {
    basis: DMatrix<f64>,
}

impl OrthoFrame {
    /// Builds the frame from a Householder reflection that sends the unit
    /// normal `u` to `σ eₙ`, with `σ = −sign(uₙ)` so that `u − σ eₙ` has no
    /// cancellation in its last entry.
    pub fn new(f: &LinearFunctional) -> Self {
        let n = f.dim();
        let u = f.unit_normal();
        let sign = if u[n - 1] >= 0.0 { 1.0 } else { -1.0 };
        let sigma = -sign;

        let mut w = DVector::from_vec(u.clone());
        w[n - 1] -= sigma;
        let ww = w.norm_squared();
        let mut basis = DMatrix::<f64>::identity(n, n);
        basis -= (2.0 / ww) * &w * w.transpose();

        // H eₙ = σ u, so flip the last column to make it +u.
        for i in 0..n {
            basis[(i, n - 1)] *= sigma;
        }
        OrthoFrame { basis }
    }

    pub fn basis(&self) -> &DMatrix<f64> {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    /// Always the last axis (1-based index `n`).
    pub fn aligned_axis_index(&self) -> usize {
        self.dim()
    }

    pub fn axis(&self, j: usize) -> Vec<f64> {
        self.basis.column(j).iter().copied().collect()
    }

    /// `basisᵀ · P`.
    pub fn primed_coords(&self, point: &[f64]) -> Result<Vec<f64>> {
        check_dim(self.dim(), point.len())?;
        let p = DVector::from_column_slice(point);
        Ok((self.basis.transpose() * p).iter().copied().collect())
    }

    /// Maps primed coordinates back to standard ones.
    pub fn from_primed(&self, primed: &[f64]) -> Result<Vec<f64>> {
        check_dim(self.dim(), primed.len())?;
        let p = DVector::from_column_slice(primed);
        Ok((&self.basis * p).iter().copied().collect())
    }

    /// `max |basisᵀ basis − I|`.
    pub fn orthonormality_defect(&self) -> f64 {
        let n = self.dim();
        let gram = self.basis.transpose() * &self.basis;
        (gram - DMatrix::<f64>::identity(n, n)).amax()
    }
}

pub fn orthogonal_frame(f: &LinearFunctional) -> OrthoFrame {
    OrthoFrame::new(f)
}
