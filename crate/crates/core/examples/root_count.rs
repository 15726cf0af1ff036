//! Real roots of the cubic cut out by a vertical line over the plane
//! x + y + z = 0 and the surface xyz = 1.
//!
//! The full cubic often has three real roots; only one of them lies on the
//! positive branch of the surface.

use levelwise::gmam::{
    count_surface_roots, cross_check_roots, surface_height, vertical_line_cubic,
};

fn main() -> levelwise::Result<()> {
    for (x, y) in [
        (0.0, 0.0),
        (1.0, 1.0),
        (2.0, -1.0),
        (-1.0, -1.0),
        (10.0, -3.0),
    ] {
        let cubic = vertical_line_cubic(x, y)?;
        let check = cross_check_roots(&cubic);
        let h = surface_height(x, y)?;
        println!(
            "base ({x}, {y}): {cubic}; delta {}; real roots {} (methods agree: {}); \
             on the surface {}; height t = {} at {:?}",
            check.discriminant.discriminant.unwrap(),
            check.sturm.count,
            check.agree,
            count_surface_roots(x, y)?,
            h.t,
            h.point
        );
    }
    Ok(())
}
