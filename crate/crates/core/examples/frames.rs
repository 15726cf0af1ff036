//! An orthonormal frame whose last axis is the unit gradient. In it the
//! functional reads `|grad f| * x_n'`.

use levelwise::linear::{orthogonal_frame, LinearFunctional};

fn main() -> levelwise::Result<()> {
    let f = LinearFunctional::new(vec![2.0, 1.0, 2.0])?;
    let frame = orthogonal_frame(&f);
    for j in 0..frame.dim() {
        println!("axis {}: {:?}", j + 1, frame.axis(j));
    }
    println!("orthonormality defect: {:e}", frame.orthonormality_defect());

    let p = [1.0, -2.0, 0.5];
    let primed = frame.primed_coords(&p)?;
    println!("P = {p:?}");
    println!("P' = {primed:?}");
    println!(
        "f(P) = {}, |grad f| * x3' = {}",
        f.evaluate(&p)?,
        f.gradient_norm() * primed[2]
    );
    println!("back to standard: {:?}", frame.from_primed(&primed)?);
    Ok(())
}
