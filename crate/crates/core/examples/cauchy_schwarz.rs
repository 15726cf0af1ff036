//! Extremes of a linear functional on a sphere, and the Cauchy-Schwarz
//! certificate that follows from them.

use levelwise::extremal::{cauchy_schwarz_certificate, prove_cauchy_schwarz, sphere_extrema};
use levelwise::linear::LinearFunctional;
use levelwise::Tolerances;

fn main() -> levelwise::Result<()> {
    let f = LinearFunctional::new(vec![2.0, 1.0, 2.0])?;
    let e = sphere_extrema(&f, 1.0)?;
    println!("max {} at {:?}", e.max_value, e.max_point);
    println!("min {} at {:?}", e.min_value, e.min_point);

    let a = [1.0, -2.0, 3.0];
    let x = [0.5, 4.0, 1.0];
    let proof = prove_cauchy_schwarz(&a, &x, &Tolerances::default())?;
    println!(
        "x = {} * {:?}; f(x/|x|) = {} <= {}",
        proof.scale, proof.unit, proof.unit_value, proof.extrema.max_value
    );
    let c = proof.certificate;
    println!("|a.x| = {} <= |a||x| = {} (gap {})", c.lhs, c.rhs, c.gap);

    let parallel = cauchy_schwarz_certificate(&a, &[-2.0, 4.0, -6.0])?;
    println!("a against -2a: equality = {}", parallel.equality);
    Ok(())
}
