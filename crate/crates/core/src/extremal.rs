//! Distances between level sets, extrema of functionals on spheres and
//! Cauchy-Schwarz certificates.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linear::{check_dim, check_finite, dot, norm, Hyperplane, LinearFunctional};
use crate::tolerance::Tolerances;

/// Distance between the level sets `f = c1` and `f = c2`: the rise
/// `|c2 − c1|` over the slope `|∇f|`.
pub fn level_set_distance(f: &LinearFunctional, c1: f64, c2: f64) -> f64 {
    (c2 - c1).abs() / f.gradient_norm()
}

/// `|f(P) − level| / |∇f|`.
pub fn point_hyperplane_distance(h: &Hyperplane, point: &[f64]) -> Result<f64> {
    Ok(h.signed_distance(point)?.abs())
}

/// The two poles of a sphere with respect to a functional and the values
/// the functional takes there.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalResult {
    pub max_point: Vec<f64>,
    pub min_point: Vec<f64>,
    pub max_value: f64,
    pub min_value: f64,
    pub radius: f64,
}

/// Extrema of `f` on the sphere of the given radius about the origin.
///
/// The poles are the sphere points farthest from the zero level set of `f`,
/// at `±radius · ∇f/|∇f|`, where `f = ±radius · |∇f|`.
pub fn sphere_extrema(f: &LinearFunctional, radius: f64) -> Result<ExtremalResult> {
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(Error::NonpositiveRadius(radius));
    }
    let max_point: Vec<f64> = f.unit_normal().iter().map(|u| radius * u).collect();
    let min_point = max_point.iter().map(|x| -x).collect();
    let max_value = radius * f.gradient_norm();
    Ok(ExtremalResult {
        max_point,
        min_point,
        max_value,
        min_value: -max_value,
        radius,
    })
}

/// Reduces a nonzero vector to the unit sphere: returns `(x / |x|, |x|)`.
pub fn normalize_to_sphere(x: &[f64]) -> Result<(Vec<f64>, f64)> {
    check_finite(x)?;
    let scale = norm(x);
    if scale == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok((x.iter().map(|v| v / scale).collect(), scale))
}

/// Recorded when a certificate comes out violated, which can only be a
/// numerical or implementation fault.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Anomaly {
    pub excess: f64,
    pub allowance: f64,
}

/// Outcome of checking `|a·x| ≤ |a| |x|` for one pair of vectors.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certificate {
    pub lhs: f64,
    pub rhs: f64,
    pub gap: f64,
    pub holds: bool,
    pub equality: bool,
    /// Angle between the lines spanned by `a` and `x`, when both are nonzero.
    pub angle: Option<f64>,
    pub anomaly: Option<Anomaly>,
}

pub fn cauchy_schwarz_certificate(a: &[f64], x: &[f64]) -> Result<Certificate> {
    cauchy_schwarz_certificate_with(a, x, &Tolerances::default())
}

pub fn cauchy_schwarz_certificate_with(
    a: &[f64],
    x: &[f64],
    tol: &Tolerances,
) -> Result<Certificate> {
    if a.is_empty() {
        return Err(Error::EmptyVector);
    }
    check_dim(a.len(), x.len())?;
    check_finite(a)?;
    check_finite(x)?;

    let (na, nx) = (norm(a), norm(x));
    let lhs = dot(a, x).abs();
    let rhs = na * nx;
    let gap = rhs - lhs;
    let allowance = tol.verdict * rhs.max(1.0);
    let holds = lhs <= rhs + allowance;

    let (equality, angle) = if na == 0.0 || nx == 0.0 {
        (na == 0.0 && nx == 0.0, None)
    } else {
        let angle = line_angle(a, na, x, nx);
        (gap <= allowance && angle <= tol.parallel_angle, Some(angle))
    };

    let anomaly = (!holds).then_some(Anomaly {
        excess: lhs - rhs,
        allowance,
    });
    Ok(Certificate {
        lhs,
        rhs,
        gap,
        holds,
        equality,
        angle,
        anomaly,
    })
}

/// Angle in `[0, π/2]` between the lines through `a` and `x`, computed from
/// the chord between unit vectors so small angles keep full precision.
fn line_angle(a: &[f64], na: f64, x: &[f64], nx: f64) -> f64 {
    let sign = if dot(a, x) < 0.0 { -1.0 } else { 1.0 };
    let chord: Vec<f64> = a
        .iter()
        .zip(x)
        .map(|(ai, xi)| ai / na - sign * xi / nx)
        .collect();
    2.0 * (norm(&chord) / 2.0).min(1.0).asin()
}

/// Every step of the unit-sphere argument for one pair `(a, x)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CauchySchwarzProof {
    pub unit: Vec<f64>,
    pub scale: f64,
    pub extrema: ExtremalResult,
    /// `a · (x/|x|)`, which must lie between the sphere extrema.
    pub unit_value: f64,
    pub within_extrema: bool,
    pub certificate: Certificate,
}

/// Normalizes `x` onto the unit sphere, extremizes `a·u` there and compares
/// with the direct certificate.
pub fn prove_cauchy_schwarz(a: &[f64], x: &[f64], tol: &Tolerances) -> Result<CauchySchwarzProof> {
    let certificate = cauchy_schwarz_certificate_with(a, x, tol)?;
    let f = LinearFunctional::new(a.to_vec())?;
    let (unit, scale) = normalize_to_sphere(x)?;
    let extrema = sphere_extrema(&f, 1.0)?;
    let unit_value = f.evaluate(&unit)?;
    let slack = tol.verdict * extrema.max_value.max(1.0);
    let within_extrema =
        unit_value <= extrema.max_value + slack && unit_value >= extrema.min_value - slack;
    Ok(CauchySchwarzProof {
        unit,
        scale,
        extrema,
        unit_value,
        within_extrema,
        certificate,
    })
}
