//! Linear functionals and the geometry they carry.
//!
//! For a linear functional `f(x) = a·x`, the value at a point equals the
//! gradient norm `|a|` times the signed distance from the point to the zero
//! level set. This crate builds on that identity:
//!
//! - [`linear`]: functionals, hyperplanes, signed distances and orthonormal
//!   frames whose last axis is the gradient direction.
//! - [`extremal`]: distances between level sets, point-to-hyperplane
//!   distances, extrema over spheres and Cauchy-Schwarz certificates.
//! - [`gmam`]: the GM-AM inequality over unit-product surfaces, exact
//!   real-root counting for cubics, surface heights over the plane
//!   `x + y + z = 0` and Hessian positive-definiteness checks.
//! - [`cli`]: the command-line surface behind the `levelwise` binary.
//!
//! ```
//! use levelwise::linear::LinearFunctional;
//! use levelwise::extremal::level_set_distance;
//!
//! let f = LinearFunctional::new(vec![3.0, 4.0]).unwrap();
//! assert_eq!(f.gradient_norm(), 5.0);
//! assert_eq!(level_set_distance(&f, 1.0, 31.0), 6.0);
//! ```

// `!(x > 0.0)` is how NaN gets rejected alongside nonpositive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod extremal;
pub mod gmam;
pub mod linear;
pub mod sampling;
pub mod tolerance;

pub use error::{Error, Result};
pub use tolerance::Tolerances;
