mod common;

use approx::assert_relative_eq;
use levelwise::extremal::{
    cauchy_schwarz_certificate, level_set_distance, point_hyperplane_distance,
    prove_cauchy_schwarz, sphere_extrema,
};
use levelwise::gmam::{
    count_surface_roots, gm_am_check, hyperbola_height, hyperbola_point, reduce_to_unit_product,
    surface_height, surface_min_oracle, vertical_line_cubic, ProductSurface, VerticalLine,
};
use levelwise::linear::{dot, norm, orthogonal_frame, Hyperplane, LinearFunctional};
use levelwise::sampling::{seeded, uniform_vector, unit_vector};
use levelwise::Tolerances;
use proptest::prelude::*;
use rand::Rng;

fn coeffs(max_dim: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-100.0..100.0_f64, 1..=max_dim)
        .prop_filter("nonzero gradient", |v| norm(v) > 1e-6)
}

fn angle_between(u: &[f64], v: &[f64]) -> f64 {
    let c = (dot(u, v) / (norm(u) * norm(v))).abs().min(1.0);
    // acos loses precision near 1; the cross-norm form does not.
    let s2: f64 = (0..u.len())
        .flat_map(|i| (0..u.len()).map(move |j| (i, j)))
        .map(|(i, j)| (u[i] * v[j] - u[j] * v[i]).powi(2))
        .sum::<f64>()
        / 2.0;
    (s2.sqrt() / (norm(u) * norm(v))).atan2(c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn frame_is_orthonormal_and_aligned(a in coeffs(12)) {
        let f = LinearFunctional::new(a.clone()).unwrap();
        let frame = orthogonal_frame(&f);
        prop_assert!(frame.orthonormality_defect() <= 1e-12);
        let last = frame.axis(f.dim() - 1);
        let u = f.unit_normal();
        for (x, y) in last.iter().zip(&u) {
            prop_assert!((x - y).abs() <= 1e-12);
        }
    }

    #[test]
    fn primed_last_coordinate_is_signed_distance(
        a in coeffs(12),
        seed in any::<u64>(),
    ) {
        let f = LinearFunctional::new(a).unwrap();
        let frame = orthogonal_frame(&f);
        let mut rng = seeded(seed);
        let p = uniform_vector(&mut rng, f.dim(), -50.0, 50.0);
        let primed = frame.primed_coords(&p).unwrap();
        let d = f.signed_distance(&p).unwrap();
        prop_assert!((primed[f.dim() - 1] - d).abs() <= 1e-12 * d.abs().max(1.0) * 50.0);
        let back = frame.from_primed(&primed).unwrap();
        prop_assert!(common::euclid(&back, &p) <= 1e-12 * norm(&p).max(1.0));
        let u = unit_vector(&mut rng, f.dim());
        prop_assert!((norm(&frame.primed_coords(&u).unwrap()) - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn foot_lies_on_plane_along_the_normal(
        a in coeffs(8),
        level in -100.0..100.0_f64,
        seed in any::<u64>(),
    ) {
        let h = Hyperplane::from_coeffs(a.clone(), level).unwrap();
        let mut rng = seeded(seed);
        let p = uniform_vector(&mut rng, a.len(), -20.0, 20.0);
        let q = h.foot_of_perpendicular(&p).unwrap();
        let value = h.functional().evaluate(&q).unwrap();
        let scale = norm(&a) * norm(&q).max(1.0);
        prop_assert!((value - level).abs() <= 1e-12 * scale.max(level.abs()));

        let oracle = common::project(&a, level, &p);
        prop_assert!(common::euclid(&q, &oracle) <= 1e-12 * norm(&p).max(norm(&q)).max(1.0));

        let disp: Vec<f64> = p.iter().zip(&q).map(|(x, y)| x - y).collect();
        if norm(&disp) > 1e-6 * norm(&p).max(1.0) {
            prop_assert!(angle_between(&disp, &a) <= 1e-9);
        }
        let d = point_hyperplane_distance(&h, &p).unwrap();
        prop_assert!((d - norm(&disp)).abs() <= 1e-12 * d.max(1.0) * 10.0);
    }

    #[test]
    fn distance_is_scale_invariant(
        a in coeffs(8),
        c1 in -1e3..1e3_f64,
        c2 in -1e3..1e3_f64,
        k in prop_oneof![-1e3..-1e-3_f64, 1e-3..1e3_f64],
    ) {
        let f = LinearFunctional::new(a).unwrap();
        let d = level_set_distance(&f, c1, c2);
        let dk = level_set_distance(&f.scaled(k).unwrap(), k * c1, k * c2);
        prop_assert!((d - dk).abs() <= 1e-12 * d.max(f64::MIN_POSITIVE) * 4.0);
    }

    #[test]
    fn json_floats_round_trip_bit_exactly(v in any::<f64>().prop_filter("finite", |v| v.is_finite())) {
        let text = levelwise::cli::output::format_f64(v);
        let back: f64 = text.parse().unwrap();
        prop_assert_eq!(back.to_bits(), v.to_bits());
    }
}

#[test]
fn point_distance_matches_level_distance() {
    let mut rng = seeded(7);
    for _ in 0..2000 {
        let n = rng.random_range(1..=16);
        let a = uniform_vector(&mut rng, n, -10.0, 10.0);
        let level = rng.random_range(-100.0..100.0);
        let p = uniform_vector(&mut rng, n, -10.0, 10.0);
        let h = Hyperplane::from_coeffs(a, level).unwrap();
        let d = point_hyperplane_distance(&h, &p).unwrap();
        let via_levels =
            level_set_distance(h.functional(), level, h.functional().evaluate(&p).unwrap());
        assert_relative_eq!(d, via_levels, max_relative = 1e-12);
    }
}

#[test]
fn poles_are_antipodal_on_the_sphere() {
    let mut rng = seeded(11);
    for _ in 0..1000 {
        let n = rng.random_range(1..=16);
        let f = LinearFunctional::new(uniform_vector(&mut rng, n, -5.0, 5.0)).unwrap();
        let r = rng.random_range(0.01..100.0);
        let e = sphere_extrema(&f, r).unwrap();
        for (x, y) in e.max_point.iter().zip(&e.min_point) {
            assert_eq!(*x, -*y);
        }
        assert_relative_eq!(norm(&e.max_point), r, max_relative = 1e-12);
        assert_relative_eq!(e.max_value, f.gradient_norm() * r, max_relative = 1e-12);
    }
}

#[test]
fn equality_iff_parallel() {
    let mut rng = seeded(3);
    for _ in 0..2000 {
        let n = rng.random_range(2..=10);
        let a = unit_vector(&mut rng, n);
        let k: f64 = rng.random_range(-10.0..10.0);
        let x: Vec<f64> = a.iter().map(|v| k * v).collect();
        if k.abs() > 1e-3 {
            assert!(
                cauchy_schwarz_certificate(&a, &x).unwrap().equality,
                "k = {k}"
            );
        }

        // Tilt by a fixed angle inside the plane of a and a random orthogonal vector.
        let mut w = unit_vector(&mut rng, n);
        let proj = dot(&w, &a);
        w.iter_mut().zip(&a).for_each(|(wi, ai)| *wi -= proj * ai);
        let wn = norm(&w);
        if wn < 1e-3 {
            continue;
        }
        let theta = rng.random_range(1e-3..std::f64::consts::FRAC_PI_2);
        let tilted: Vec<f64> = a
            .iter()
            .zip(&w)
            .map(|(ai, wi)| theta.cos() * ai + theta.sin() * wi / wn)
            .collect();
        let cert = cauchy_schwarz_certificate(&a, &tilted).unwrap();
        assert!(cert.holds && !cert.equality, "theta = {theta}");
    }
}

#[test]
fn proof_pipeline_matches_certificate() {
    let tol = Tolerances::default();
    let mut rng = seeded(5);
    for _ in 0..500 {
        let n = rng.random_range(1..=12);
        let a = uniform_vector(&mut rng, n, -3.0, 3.0);
        let x = uniform_vector(&mut rng, n, -3.0, 3.0);
        let proof = prove_cauchy_schwarz(&a, &x, &tol).unwrap();
        assert!(proof.within_extrema);
        assert!(proof.certificate.holds);
        assert_relative_eq!(norm(&proof.unit), 1.0, max_relative = 1e-12);
    }
}

#[test]
fn gm_am_equality_on_constant_tuples() {
    let mut rng = seeded(9);
    for _ in 0..1000 {
        let n = rng.random_range(1..=12);
        let c: f64 = rng.random_range(1e-3..1e3);
        let r = gm_am_check(&vec![c; n]).unwrap();
        assert!(r.holds && r.equality, "c = {c}, n = {n}");
        let (scaled, s) = reduce_to_unit_product(&vec![c; n]).unwrap();
        assert_relative_eq!(s, c, max_relative = 1e-12);
        assert!(scaled.iter().all(|v| (v - 1.0).abs() <= 1e-12));
    }
}

#[test]
fn surface_branch_root_is_unique() {
    let mut rng = seeded(42);
    for _ in 0..10_000 {
        let (x, y) = (rng.random_range(-50.0..50.0), rng.random_range(-50.0..50.0));
        assert_eq!(count_surface_roots(x, y).unwrap(), 1, "base ({x}, {y})");
    }
}

#[test]
fn height_lands_on_the_surface_above_its_base() {
    let mut rng = seeded(13);
    for _ in 0..10_000 {
        let (x, y) = (rng.random_range(-50.0..50.0), rng.random_range(-50.0..50.0));
        let h = surface_height(x, y).unwrap();
        let [px, py, pz] = h.point;
        assert!(px > 0.0 && py > 0.0 && pz > 0.0);
        assert!((px * py * pz - 1.0).abs() <= 1e-9, "base ({x}, {y})");
        assert!(h.residual <= 1e-10 * h.t.abs().powi(3).max(1.0));

        let base = VerticalLine { x, y }.base_point();
        let disp: Vec<f64> = h.point.iter().zip(&base).map(|(p, b)| p - b).collect();
        assert!(h.t > 0.0);
        assert_relative_eq!(norm(&disp), h.t * 3f64.sqrt(), max_relative = 1e-9);
        assert!(angle_between(&disp, &[1.0, 1.0, 1.0]) <= 1e-9);
    }
}

#[test]
fn expanded_cubic_matches_product_form_off_the_branch() {
    // Over (2, −1) the expanded cubic is t³ − 3t + 1 with three real roots;
    // bisecting the unexpanded product residual finds each of them.
    let line = VerticalLine { x: 2.0, y: -1.0 };
    let cubic = vertical_line_cubic(2.0, -1.0).unwrap();
    let product = |t: f64| line.residual(t);
    let brackets = [(-2.5, -1.5), (0.0, 1.0), (1.0, 2.0)];
    for (lo, hi) in brackets {
        let root = if product(lo) < 0.0 {
            common::bisect(product, lo, hi)
        } else {
            common::bisect(|t| -product(t), lo, hi)
        };
        assert!(cubic.eval(root).abs() <= 1e-9, "root {root}");
    }
}

#[test]
fn oracle_refines_toward_the_minimum() {
    let surface = ProductSurface::unit(3).unwrap();
    let mut last = f64::INFINITY;
    for samples in [1_000, 10_000, 100_000] {
        let m = surface_min_oracle(&surface, 10.0, samples).unwrap();
        assert!(m.value <= last);
        assert!(m.value >= 3.0 - 1e-12);
        last = m.value;
    }
    assert_relative_eq!(last, 3.0, max_relative = 1e-12);
}

#[test]
fn rotated_hyperbola_is_convex() {
    let mut rng = seeded(17);
    for _ in 0..10_000 {
        let a: f64 = rng.random_range(-1e3..1e3);
        let b: f64 = rng.random_range(-1e3..1e3);
        let (ha, hb, hm) = (
            hyperbola_height(a),
            hyperbola_height(b),
            hyperbola_height(0.5 * (a + b)),
        );
        assert!(hm <= 0.5 * (ha + hb) + 1e-12 * ha.max(hb));
        assert!((ha * ha - a * a - 1.0).abs() <= 1e-12 * ha * ha);
        let [x, y] = hyperbola_point(a);
        assert!((x * y - 0.5).abs() <= 1e-12 * ha * ha);
    }
}
