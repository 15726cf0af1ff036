//! The GM-AM inequality as a distance problem.
//!
//! On the unit-product surface `{x > 0 : Πxᵢ = 1}` the coordinate sum is
//! `√n` times the distance to the plane `Σxᵢ = 0`, so the inequality
//! `Σxᵢ ≥ n` says the surface is closest to that plane at `(1, …, 1)`.
//! The submodules supply the numerical evidence for the two- and
//! three-variable pictures.

pub mod cubic;
pub mod hessian;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tolerance::Tolerances;

pub use cubic::{
    count_real_roots, count_real_roots_by_discriminant, count_real_roots_in, count_surface_roots,
    cross_check_roots, surface_height, vertical_line_cubic, Cubic, RootCheck, RootCount,
    RootMethod, SurfaceHeight, VerticalLine,
};
pub use hessian::{
    g, hessian_of_g, hyperbola_height, hyperbola_point, hyperbola_point_on_unit_curve,
    is_positive_definite, leading_minors, rotated_axes, PD_GUARD,
};

fn check_positive(x: &[f64]) -> Result<()> {
    if x.is_empty() {
        return Err(Error::EmptyVector);
    }
    match x
        .iter()
        .enumerate()
        .find(|(_, v)| !(**v > 0.0) || !v.is_finite())
    {
        Some((index, &value)) => Err(Error::NonpositiveEntry { index, value }),
        None => Ok(()),
    }
}

/// `exp(mean ln xᵢ)`, safe against overflow of the raw product.
fn geometric_mean(x: &[f64]) -> f64 {
    (x.iter().map(|v| v.ln()).sum::<f64>() / x.len() as f64).exp()
}

/// `{x ∈ ℝⁿ : xᵢ > 0, Πxᵢ = product_level}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProductSurface {
    n: usize,
    product_level: f64,
}

impl ProductSurface {
    pub fn new(n: usize, product_level: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVector);
        }
        if !(product_level > 0.0) || !product_level.is_finite() {
            return Err(Error::UnsupportedLevel(product_level));
        }
        Ok(ProductSurface { n, product_level })
    }

    pub fn unit(n: usize) -> Result<Self> {
        ProductSurface::new(n, 1.0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn product_level(&self) -> f64 {
        self.product_level
    }

    pub fn contains(&self, point: &[f64], tol: f64) -> bool {
        point.len() == self.n
            && point.iter().all(|&v| v > 0.0)
            && (point.iter().product::<f64>() - self.product_level).abs()
                <= tol * self.product_level
    }
}

/// Scales a positive tuple onto the unit-product surface: returns
/// `(x / ⁿ√p, ⁿ√p)` with `p = Πxᵢ`.
pub fn reduce_to_unit_product(x: &[f64]) -> Result<(Vec<f64>, f64)> {
    check_positive(x)?;
    let scale = geometric_mean(x);
    Ok((x.iter().map(|v| v / scale).collect(), scale))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GmAmRecord {
    pub gm: f64,
    pub am: f64,
    pub holds: bool,
    pub equality: bool,
}

pub fn gm_am_check(x: &[f64]) -> Result<GmAmRecord> {
    gm_am_check_with(x, &Tolerances::default())
}

pub fn gm_am_check_with(x: &[f64], tol: &Tolerances) -> Result<GmAmRecord> {
    check_positive(x)?;
    let gm = geometric_mean(x);
    let am = x.iter().sum::<f64>() / x.len() as f64;
    let (lo, hi) = x.iter().fold((f64::INFINITY, 0.0_f64), |(lo, hi), &v| {
        (lo.min(v), hi.max(v))
    });
    Ok(GmAmRecord {
        gm,
        am,
        holds: gm <= am + tol.verdict * am.max(1.0),
        equality: hi - lo <= tol.verdict * hi,
    })
}

/// Minimizer of the coordinate sum on the unit-product surface: `(1, …, 1)`
/// with sum `n`.
pub fn surface_sum_minimum(surface: &ProductSurface) -> Result<(Vec<f64>, f64)> {
    if surface.product_level != 1.0 {
        return Err(Error::UnsupportedLevel(surface.product_level));
    }
    Ok((vec![1.0; surface.n], surface.n as f64))
}

/// Result of the brute-force grid search.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleMinimum {
    pub point: Vec<f64>,
    pub value: f64,
    /// Spacing of the grid in `ln x`.
    pub log_step: f64,
    pub points_per_axis: usize,
    pub evaluated: usize,
}

pub const MIN_ORACLE_SAMPLES: usize = 1000;

/// `m` log-uniform values over `[1/w, w]`, symmetric about 1 so the middle
/// value is exactly 1 when `m` is odd.
fn log_grid(width: f64, m: usize) -> (Vec<f64>, f64) {
    let lw = width.ln();
    if m == 1 {
        return (vec![1.0], 0.0);
    }
    let denom = (m - 1) as f64;
    let grid = (0..m)
        .map(|i| ((2.0 * i as f64 - denom) / denom * lw).exp())
        .collect();
    (grid, 2.0 * lw / denom)
}

fn largest_odd_at_most(k: usize) -> usize {
    if k % 2 == 1 {
        k
    } else {
        k.saturating_sub(1).max(1)
    }
}

/// Brute-force minimum of the coordinate sum over a log-uniform sample of
/// the unit-product surface inside the box `[1/w, w]ⁿ`.
///
/// For `n = 2` the grid runs over `x` with `y = 1/x`; for `n = 3` over
/// `(x, y)` with `z = 1/(xy)`, dropping samples whose `z` leaves the box.
/// Grid sizes are rounded down to odd. Ties go to the lexicographically
/// smallest point.
pub fn surface_min_oracle(
    surface: &ProductSurface,
    box_half_width: f64,
    samples: usize,
) -> Result<OracleMinimum> {
    if surface.product_level != 1.0 {
        return Err(Error::UnsupportedLevel(surface.product_level));
    }
    if !(box_half_width >= 1.0) || !box_half_width.is_finite() {
        return Err(Error::InvalidBox(box_half_width));
    }
    if samples < MIN_ORACLE_SAMPLES {
        return Err(Error::TooFewSamples {
            min: MIN_ORACLE_SAMPLES,
            got: samples,
        });
    }

    let mut best: Option<(Vec<f64>, f64)> = None;
    let mut evaluated = 0;
    let mut consider = |p: Vec<f64>| {
        evaluated += 1;
        let value: f64 = p.iter().sum();
        let better = match &best {
            None => true,
            Some((bp, bv)) => value < *bv || (value == *bv && p < *bp),
        };
        if better {
            best = Some((p, value));
        }
    };

    let (m, log_step) = match surface.n {
        2 => {
            let m = largest_odd_at_most(samples);
            let (grid, step) = log_grid(box_half_width, m);
            for &x in &grid {
                consider(vec![x, 1.0 / x]);
            }
            (m, step)
        }
        3 => {
            let m = largest_odd_at_most((samples as f64).sqrt() as usize);
            let (grid, step) = log_grid(box_half_width, m);
            let (lo, hi) = (1.0 / box_half_width, box_half_width);
            for &x in &grid {
                for &y in &grid {
                    let z = 1.0 / (x * y);
                    if z >= lo * (1.0 - 1e-12) && z <= hi * (1.0 + 1e-12) {
                        consider(vec![x, y, z]);
                    }
                }
            }
            (m, step)
        }
        n => return Err(Error::UnsupportedDimension(n)),
    };

    let (point, value) = best.expect("grid contains the point (1, …, 1)");
    Ok(OracleMinimum {
        point,
        value,
        log_step,
        points_per_axis: m,
        evaluated,
    })
}
