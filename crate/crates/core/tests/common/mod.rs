//! Oracles shared by the integration tests. None of these call into the
//! routines they are used to check.
#![allow(dead_code)]

use std::time::{Duration, Instant};

/// Prints one result line and fails the test if `ok` is false.
pub fn report(name: &str, ok: bool, detail: &str) {
    let tag = if ok { "PASS" } else { "FAIL" };
    println!("[{tag}] {name}: {detail}");
    assert!(ok, "{name}: {detail}");
}

pub fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

/// Direct projection onto `{x : a·x = c}`.
pub fn project(a: &[f64], c: f64, p: &[f64]) -> Vec<f64> {
    let aa: f64 = a.iter().map(|v| v * v).sum();
    let ap: f64 = a.iter().zip(p).map(|(u, v)| u * v).sum();
    let k = (ap - c) / aa;
    p.iter().zip(a).map(|(pi, ai)| pi - k * ai).collect()
}

pub fn euclid(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// Central-difference Hessian of `1/(xy)` with steps `1e-5·max(1,|·|)`.
pub fn fd_hessian(x: f64, y: f64) -> [[f64; 2]; 2] {
    let g = |x: f64, y: f64| 1.0 / (x * y);
    let hx = 1e-5 * x.abs().max(1.0);
    let hy = 1e-5 * y.abs().max(1.0);
    let gxx = (g(x + hx, y) - 2.0 * g(x, y) + g(x - hx, y)) / (hx * hx);
    let gyy = (g(x, y + hy) - 2.0 * g(x, y) + g(x, y - hy)) / (hy * hy);
    let gxy = (g(x + hx, y + hy) - g(x + hx, y - hy) - g(x - hx, y + hy) + g(x - hx, y - hy))
        / (4.0 * hx * hy);
    [[gxx, gxy], [gxy, gyy]]
}

/// Plain bisection for an increasing function with `f(lo) < 0 < f(hi)`.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// 100 log-uniform values over `[1e-2, 1e2]`.
pub fn hessian_grid_axis() -> Vec<f64> {
    let (a, b) = (1e-2_f64.ln(), 1e2_f64.ln());
    (0..100)
        .map(|i| (a + (b - a) * i as f64 / 99.0).exp())
        .collect()
}
