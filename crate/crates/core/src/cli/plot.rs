//! CSV data behind the three figures: the gradient-aligned frame with the
//! sphere poles, the curve `xy = 1` against the line `x + y = 0`, and the
//! surface `xyz = 1` against the plane `x + y + z = 0`.

use std::io::Write;

use crate::extremal::sphere_extrema;
use crate::linear::{orthogonal_frame, LinearFunctional};
use crate::sampling::{seeded, unit_vector};

use super::output::format_f64;

/// One CSV table: a header and rows of already-formatted fields.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, series: &str, values: &[f64]) {
        let mut row = vec![series.to_string()];
        row.extend(values.iter().map(|v| format_f64(*v)));
        self.rows.push(row);
    }

    fn push_indexed(&mut self, series: &str, i: usize, j: usize, values: &[f64]) {
        let mut row = vec![series.to_string(), i.to_string(), j.to_string()];
        row.extend(values.iter().map(|v| format_f64(*v)));
        self.rows.push(row);
    }

    /// RFC 4180 quoting, LF line endings.
    pub fn write_csv<W: Write>(&self, writer: W) -> csv::Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(writer);
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn series_count(&self, series: &str) -> usize {
        self.rows.iter().filter(|r| r[0] == series).count()
    }
}

fn linspace(lo: f64, hi: f64, m: usize) -> impl Iterator<Item = f64> {
    let step = if m > 1 {
        (hi - lo) / (m - 1) as f64
    } else {
        0.0
    };
    (0..m).map(move |i| lo + step * i as f64)
}

fn logspace(lo: f64, hi: f64, m: usize) -> impl Iterator<Item = f64> {
    linspace(lo.ln(), hi.ln(), m).map(f64::exp)
}

/// Gradient, frame axes, poles, the zero level set and sample points of the
/// unit sphere. Columns `series,c1,…,cn`.
pub fn figure1(f: &LinearFunctional, resolution: usize, seed: u64) -> Table {
    let n = f.dim();
    let mut header = vec!["series".to_string()];
    header.extend((1..=n).map(|i| format!("c{i}")));
    let mut t = Table {
        header,
        rows: Vec::new(),
    };

    let frame = orthogonal_frame(f);
    let poles = sphere_extrema(f, 1.0).expect("unit radius");
    t.push("gradient", f.coeffs());
    for j in 0..n {
        t.push(&format!("axis_{}", j + 1), &frame.axis(j));
    }
    t.push("north_pole", &poles.max_point);
    t.push("south_pole", &poles.min_point);

    match n {
        2 => {
            let axis = frame.axis(0);
            for s in linspace(-1.5, 1.5, resolution) {
                t.push("hyperplane", &[s * axis[0], s * axis[1]]);
            }
            for k in 0..resolution {
                let theta = std::f64::consts::TAU * k as f64 / resolution as f64;
                t.push("sphere", &[theta.cos(), theta.sin()]);
            }
        }
        3 => {
            let (a, b) = (frame.axis(0), frame.axis(1));
            let m = (resolution / 8).max(2);
            for s in linspace(-1.5, 1.5, m) {
                for r in linspace(-1.5, 1.5, m) {
                    let p: Vec<f64> = (0..3).map(|i| s * a[i] + r * b[i]).collect();
                    t.push("hyperplane", &p);
                }
            }
            let rings = (resolution / 2).max(2);
            for i in 0..=rings {
                let phi = std::f64::consts::PI * i as f64 / rings as f64;
                for k in 0..resolution {
                    let theta = std::f64::consts::TAU * k as f64 / resolution as f64;
                    t.push(
                        "sphere",
                        &[phi.sin() * theta.cos(), phi.sin() * theta.sin(), phi.cos()],
                    );
                }
            }
        }
        _ => {
            let mut rng = seeded(seed);
            for _ in 0..resolution {
                t.push("sphere", &unit_vector(&mut rng, n));
            }
        }
    }
    t
}

/// The branch of `xy = 1` in the first quadrant, the line `x + y = 0`, the
/// minimizer `(1, 1)` and its foot on the line. Columns `series,x,y`.
pub fn figure2(resolution: usize) -> Table {
    let mut t = Table::new(&["series", "x", "y"]);
    for x in logspace(0.125, 8.0, resolution) {
        t.push("curve", &[x, 1.0 / x]);
    }
    for x in linspace(-8.0, 8.0, resolution) {
        t.push("line", &[x, -x]);
    }
    t.push("minimizer", &[1.0, 1.0]);
    t.push("foot", &[0.0, 0.0]);
    t
}

/// The surface `z = 1/(xy)` over a log grid on `[1/4, 4]²`, the plane
/// `x + y + z = 0` over `[−4, 4]²` and the minimizer `(1, 1, 1)`.
/// Columns `series,i,j,x,y,z`. Grid rows carry their indices; cell
/// `(i, j)–(i+1, j+1)` splits into two triangles along that diagonal.
pub fn figure3(resolution: usize) -> Table {
    let mut t = Table::new(&["series", "i", "j", "x", "y", "z"]);
    let grid: Vec<f64> = logspace(0.25, 4.0, resolution).collect();
    for (i, &x) in grid.iter().enumerate() {
        for (j, &y) in grid.iter().enumerate() {
            t.push_indexed("surface", i, j, &[x, y, 1.0 / (x * y)]);
        }
    }
    let m = resolution.clamp(2, 32);
    let plane: Vec<f64> = linspace(-4.0, 4.0, m).collect();
    for (i, &x) in plane.iter().enumerate() {
        for (j, &y) in plane.iter().enumerate() {
            t.push_indexed("plane", i, j, &[x, y, -x - y]);
        }
    }
    let mut marker = vec!["minimizer".to_string(), String::new(), String::new()];
    marker.extend([1.0, 1.0, 1.0].iter().map(|v| format_f64(*v)));
    t.rows.push(marker);
    t
}
