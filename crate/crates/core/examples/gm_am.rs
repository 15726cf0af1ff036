//! GM-AM through the unit-product surface: rescale to product 1, then the
//! coordinate sum is at least n, with the minimum at (1, ..., 1).

use levelwise::gmam::{gm_am_check, reduce_to_unit_product, surface_min_oracle, ProductSurface};

fn main() -> levelwise::Result<()> {
    for tuple in [
        vec![1.0, 4.0],
        vec![1.0, 1.0, 8.0],
        vec![3.0, 3.0, 3.0, 3.0],
    ] {
        let r = gm_am_check(&tuple)?;
        let (reduced, scale) = reduce_to_unit_product(&tuple)?;
        println!(
            "{tuple:?}: gm {} <= am {} (equality {}); reduced {reduced:?}, scale {scale}",
            r.gm, r.am, r.equality
        );
    }

    for n in [2, 3] {
        let m = surface_min_oracle(&ProductSurface::unit(n)?, 10.0, 100_000)?;
        println!(
            "n = {n}: grid minimum {} at {:?} over {} points",
            m.value, m.point, m.evaluated
        );
    }
    Ok(())
}
