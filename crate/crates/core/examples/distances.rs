//! Distances between level sets and from a point to a hyperplane, read off
//! as rise over slope.

use levelwise::extremal::{level_set_distance, point_hyperplane_distance};
use levelwise::linear::{Hyperplane, LinearFunctional};

fn main() -> levelwise::Result<()> {
    let f = LinearFunctional::new(vec![3.0, 4.0])?;
    println!(
        "3x + 4y = 1 to 3x + 4y = 31: rise 30 / slope {} = {}",
        f.gradient_norm(),
        level_set_distance(&f, 1.0, 31.0)
    );

    let g = LinearFunctional::new(vec![2.0, 1.0, 2.0])?;
    println!(
        "2x + y + 2z = 1 to 31: {}",
        level_set_distance(&g, 1.0, 31.0)
    );

    let h = Hyperplane::from_coeffs(vec![2.0, 3.0, 6.0], 0.0)?;
    let p = [1.0, 2.0, 1.0];
    let foot = h.foot_of_perpendicular(&p)?;
    println!(
        "(1, 2, 1) to 2x + 3y + 6z = 0: {} (foot {:?})",
        point_hyperplane_distance(&h, &p)?,
        foot
    );

    // The identity behind all three: value = slope * signed distance.
    let value = g.evaluate(&[0.3, -1.2, 4.0])?;
    let via_distance = g.gradient_norm() * g.signed_distance(&[0.3, -1.2, 4.0])?;
    println!("f(P) = {value}, |grad f| * delta(P) = {via_distance}");
    Ok(())
}
