//! Numerical convexity witnesses: the Hessian of 1/(xy) on the positive
//! quadrant, the rotated hyperbola, and midpoint convexity of the surface
//! height over the plane.

use levelwise::gmam::{
    hessian_of_g, hyperbola_height, hyperbola_point_on_unit_curve, is_positive_definite,
    leading_minors, surface_height,
};

fn main() -> levelwise::Result<()> {
    for (x, y) in [(1.0, 1.0), (0.01, 100.0), (3.0, 0.5)] {
        let h = hessian_of_g(x, y)?;
        let (m1, m2) = leading_minors(&h);
        println!(
            "({x}, {y}): minors {m1:e}, {m2:e}; positive definite {}",
            is_positive_definite(&h)?
        );
    }

    for xp in [-2.0, 0.0, 1.0, 5.0] {
        let [x, y] = hyperbola_point_on_unit_curve(xp);
        println!(
            "x' = {xp}: y' = {}, lands on ({x}, {y}) with xy = {}",
            hyperbola_height(xp),
            x * y
        );
    }

    let (p, q) = ((-3.0, 1.0), (2.0, 2.5));
    let mid = (0.5 * (p.0 + q.0), 0.5 * (p.1 + q.1));
    let (hp, hq, hm) = (
        surface_height(p.0, p.1)?.t,
        surface_height(q.0, q.1)?.t,
        surface_height(mid.0, mid.1)?.t,
    );
    println!("height at midpoint {hm} <= average {}", 0.5 * (hp + hq));
    Ok(())
}
