//! Command-line interface.
//!
//! Each subcommand returns a [`CommandResult`]; [`run`] renders it as a
//! table or, with `--json`, as one JSON document, and picks the exit code:
//! 0 on success, 2 for domain errors, 3 for I/O errors, 64 for usage errors.

pub mod output;
pub mod plot;

use std::ffi::OsString;
use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::Error;
use crate::extremal::{
    level_set_distance, point_hyperplane_distance, prove_cauchy_schwarz, sphere_extrema,
};
use crate::gmam::hessian::leading_minors;
use crate::gmam::{
    count_surface_roots, cross_check_roots, gm_am_check_with, hessian_of_g, is_positive_definite,
    reduce_to_unit_product, surface_height, surface_min_oracle, vertical_line_cubic, Cubic,
    ProductSurface,
};
use crate::linear::{Hyperplane, LinearFunctional};
use crate::sampling::{seeded, uniform_vector};
use crate::tolerance::Tolerances;

pub use output::{CommandResult, Status};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

/// A comma-separated list of decimals, e.g. `3,4` or `-1,0.5`.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
#[serde(transparent)]
pub struct List(pub Vec<f64>);

impl std::ops::Deref for List {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

pub fn parse_list(s: &str) -> Result<List, String> {
    s.split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<f64>()
                .map_err(|_| format!("'{part}' is not a number"))
                .and_then(|v| {
                    if v.is_finite() {
                        Ok(v)
                    } else {
                        Err(format!("'{part}' is not finite"))
                    }
                })
        })
        .collect::<Result<Vec<f64>, String>>()
        .map(List)
}

#[derive(Debug, Parser)]
#[command(
    name = "levelwise",
    version,
    about = "Rise over slope: distances, extrema and inequality certificates from linear functionals"
)]
pub struct Cli {
    /// Emit one JSON document instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Verdict tolerance for hold/equality decisions.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Seed for every sampling step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Samples per axis for plot data and grids.
    #[arg(long, global = true, default_value_t = 256)]
    pub resolution: usize,
    /// `key = value` file overriding default tolerances.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Distance between two level sets, or from a point to a hyperplane.
    Distance(DistanceArgs),
    /// Poles and extreme values of a functional on a sphere.
    Extremize(ExtremizeArgs),
    /// Cauchy-Schwarz certificate for one pair, or a seeded random sweep.
    CsCheck(CsCheckArgs),
    /// Geometric and arithmetic means of a positive tuple.
    Gmam(GmamArgs),
    /// Distinct real roots of a cubic by Sturm sequence and discriminant.
    Rootcount(RootcountArgs),
    /// Height of the surface xyz = 1 above a point of the plane x + y + z = 0.
    Height(HeightArgs),
    /// Hessian of 1/(xy) and its positive-definiteness.
    Hessian(HessianArgs),
    /// Write the data behind a figure as CSV.
    PlotData(PlotDataArgs),
}

#[derive(Debug, Args)]
pub struct DistanceArgs {
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
    pub coeffs: List,
    /// Two levels `c1,c2` of the same functional.
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true, conflicts_with_all = ["level", "point"])]
    pub levels: Option<List>,
    #[arg(long, allow_hyphen_values = true, requires = "point")]
    pub level: Option<f64>,
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
    pub point: Option<List>,
}

#[derive(Debug, Args)]
pub struct ExtremizeArgs {
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
    pub coeffs: List,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub radius: f64,
}

#[derive(Debug, Args)]
pub struct CsCheckArgs {
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true, requires = "x")]
    pub a: Option<List>,
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true, requires = "a")]
    pub x: Option<List>,
    /// Number of random pairs to check instead of one given pair.
    #[arg(long, conflicts_with_all = ["a", "x"])]
    pub sweep: Option<usize>,
    /// Dimension of the random pairs.
    #[arg(long, default_value_t = 3, requires = "sweep")]
    pub dim: usize,
}

#[derive(Debug, Args)]
pub struct GmamArgs {
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
    pub tuple: List,
    /// Also report the sum of the unit-product tuple against n.
    #[arg(long)]
    pub reduce: bool,
    /// Run the grid-search minimum of the coordinate sum (n = 2 or 3).
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, default_value_t = 100_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 10.0)]
    pub width: f64,
}

#[derive(Debug, Args)]
pub struct RootcountArgs {
    /// Base point `x,y` of the plane x + y + z = 0.
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true, conflicts_with_all = ["cubic", "sweep"])]
    pub base: Option<List>,
    /// Coefficients `c3,c2,c1,c0`.
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true, conflicts_with = "sweep")]
    pub cubic: Option<List>,
    /// Number of random base points in [-50, 50]².
    #[arg(long)]
    pub sweep: Option<usize>,
}

#[derive(Debug, Args)]
pub struct HeightArgs {
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
    pub base: List,
}

#[derive(Debug, Args)]
pub struct HessianArgs {
    /// Evaluation point `x,y` in the open first quadrant.
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true, required_unless_present = "grid")]
    pub at: Option<List>,
    /// Check every point of a resolution × resolution log grid on [1e-2, 1e2]².
    #[arg(long)]
    pub grid: bool,
}

#[derive(Debug, Args)]
pub struct PlotDataArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub figure: u8,
    #[arg(long)]
    pub out: PathBuf,
    /// Functional for figure 1.
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true, default_value = "2,1,2")]
    pub coeffs: List,
}

/// Why a command failed, which decides the exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Domain(_) => EXIT_DOMAIN,
            Failure::Io(_) => EXIT_IO,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => format!("usage: {m}"),
            Failure::Domain(e) => e.to_string(),
            Failure::Io(m) => format!("i/o: {m}"),
        }
    }
}

type CmdResult = Result<CommandResult, Failure>;

/// Everything a run produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Settings shared by every subcommand.
pub struct Context {
    pub tol: Tolerances,
    pub seed: u64,
    pub resolution: usize,
}

fn load_tolerances(cli: &Cli) -> Result<Tolerances, Failure> {
    let mut tol = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            Tolerances::from_toml_str(&text)
                .map_err(|e| Failure::Usage(format!("config {}: {e}", path.display())))?
        }
        None => Tolerances::default(),
    };
    if let Some(t) = cli.tol {
        if !(t >= 0.0) || !t.is_finite() {
            return Err(Failure::Usage(format!(
                "--tol must be a nonnegative number, got {t}"
            )));
        }
        tol.verdict = t;
    }
    Ok(tol)
}

/// Parses `args` (program name first), runs the command and renders it.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let json = args.iter().any(|a| a == "--json");

    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    stdout: e.to_string(),
                    stderr: String::new(),
                    code: EXIT_OK,
                };
            }
            return render_failure(json, &Failure::Usage(e.to_string()));
        }
    };

    let result = load_tolerances(&cli).and_then(|tol| {
        let ctx = Context {
            tol,
            seed: cli.seed,
            resolution: cli.resolution,
        };
        dispatch(&cli.command, &ctx)
    });
    match result {
        Ok(r) => Outcome {
            stdout: if cli.json {
                r.to_json() + "\n"
            } else {
                r.to_table()
            },
            stderr: String::new(),
            code: EXIT_OK,
        },
        Err(f) => render_failure(cli.json, &f),
    }
}

fn render_failure(json: bool, f: &Failure) -> Outcome {
    let message = f.message();
    let (stdout, stderr) = if json {
        (
            CommandResult::error(message).to_json() + "\n",
            String::new(),
        )
    } else {
        (String::new(), format!("error: {message}\n"))
    };
    Outcome {
        stdout,
        stderr,
        code: f.exit_code(),
    }
}

fn dispatch(command: &Command, ctx: &Context) -> CmdResult {
    match command {
        Command::Distance(a) => cmd_distance(a),
        Command::Extremize(a) => cmd_extremize(a),
        Command::CsCheck(a) => cmd_cs_check(a, ctx),
        Command::Gmam(a) => cmd_gmam(a, ctx),
        Command::Rootcount(a) => cmd_rootcount(a, ctx),
        Command::Height(a) => cmd_height(a),
        Command::Hessian(a) => cmd_hessian(a, ctx),
        Command::PlotData(a) => cmd_plotdata(a, ctx),
    }
}

fn pair(v: &[f64], what: &str) -> Result<(f64, f64), Failure> {
    match v {
        [a, b] => Ok((*a, *b)),
        _ => Err(Failure::Usage(format!("{what} takes exactly two values"))),
    }
}

pub fn cmd_distance(args: &DistanceArgs) -> CmdResult {
    let f = LinearFunctional::new(args.coeffs.0.clone())?;
    let slope = f.gradient_norm();
    let payload = match (&args.levels, args.level, &args.point) {
        (Some(levels), None, None) => {
            let (c1, c2) = pair(levels, "--levels")?;
            json!({
                "mode": "levels",
                "coeffs": f.coeffs(),
                "levels": [c1, c2],
                "rise": (c2 - c1).abs(),
                "slope": slope,
                "distance": level_set_distance(&f, c1, c2),
            })
        }
        (None, level, Some(point)) => {
            let h = Hyperplane::new(f.clone(), level.unwrap_or(0.0))?;
            let value = f.evaluate(point)?;
            json!({
                "mode": "point",
                "coeffs": f.coeffs(),
                "level": h.level(),
                "point": point,
                "value": value,
                "rise": (value - h.level()).abs(),
                "slope": slope,
                "distance": point_hyperplane_distance(&h, point)?,
                "signed_distance": h.signed_distance(point)?,
                "foot": h.foot_of_perpendicular(point)?,
            })
        }
        _ => {
            return Err(Failure::Usage(
                "give either --levels c1,c2 or --point p (with optional --level c)".into(),
            ))
        }
    };
    Ok(CommandResult::ok(payload))
}

pub fn cmd_extremize(args: &ExtremizeArgs) -> CmdResult {
    let f = LinearFunctional::new(args.coeffs.0.clone())?;
    let r = sphere_extrema(&f, args.radius)?;
    Ok(CommandResult::ok(json!({
        "coeffs": f.coeffs(),
        "gradient_norm": f.gradient_norm(),
        "radius": r.radius,
        "max_point": r.max_point,
        "min_point": r.min_point,
        "max_value": r.max_value,
        "min_value": r.min_value,
    })))
}

pub fn cmd_cs_check(args: &CsCheckArgs, ctx: &Context) -> CmdResult {
    if let (Some(a), Some(x)) = (&args.a, &args.x) {
        let cert = crate::extremal::cauchy_schwarz_certificate_with(a, x, &ctx.tol)?;
        let mut payload = json!({ "a": a, "x": x, "certificate": cert });
        // The unit-sphere argument needs a ≠ 0 and x ≠ 0.
        if let Ok(proof) = prove_cauchy_schwarz(a, x, &ctx.tol) {
            payload["unit_sphere"] = json!({
                "unit": proof.unit,
                "scale": proof.scale,
                "max_value": proof.extrema.max_value,
                "unit_value": proof.unit_value,
                "within_extrema": proof.within_extrema,
            });
        }
        let mut result = CommandResult::ok(payload);
        if let Some(anomaly) = cert.anomaly {
            result = result.with_diagnostic(format!(
                "certificate violated by {} (allowance {})",
                output::format_f64(anomaly.excess),
                output::format_f64(anomaly.allowance)
            ));
        }
        return Ok(result);
    }
    let Some(count) = args.sweep else {
        return Err(Failure::Usage("give --a and --x, or --sweep N".into()));
    };
    if args.dim == 0 {
        return Err(Failure::Usage("--dim must be at least 1".into()));
    }
    let mut rng = seeded(ctx.seed);
    let mut anomalies = 0usize;
    let mut min_relative_gap = f64::INFINITY;
    for _ in 0..count {
        let a = uniform_vector(&mut rng, args.dim, -1e3, 1e3);
        let x = uniform_vector(&mut rng, args.dim, -1e3, 1e3);
        let cert = crate::extremal::cauchy_schwarz_certificate_with(&a, &x, &ctx.tol)?;
        if !cert.holds {
            anomalies += 1;
        }
        if cert.rhs > 0.0 {
            min_relative_gap = min_relative_gap.min(cert.gap / cert.rhs);
        }
    }
    Ok(CommandResult::ok(json!({
        "pairs": count,
        "dim": args.dim,
        "seed": ctx.seed,
        "all_hold": anomalies == 0,
        "anomalies": anomalies,
        "min_relative_gap": if count > 0 { json!(min_relative_gap) } else { Value::Null },
    })))
}

pub fn cmd_gmam(args: &GmamArgs, ctx: &Context) -> CmdResult {
    let x = &args.tuple;
    let record = gm_am_check_with(x, &ctx.tol)?;
    let (reduced, scale) = reduce_to_unit_product(x)?;
    let mut payload = json!({
        "tuple": x,
        "gm": record.gm,
        "am": record.am,
        "holds": record.holds,
        "equality": record.equality,
        "reduced": reduced,
        "scale": scale,
    });
    if args.reduce {
        let sum: f64 = reduced.iter().sum();
        let n = x.len() as f64;
        payload["reduction"] = json!({
            "sum": sum,
            "n": x.len(),
            "sum_at_least_n": sum >= n - ctx.tol.sweep,
        });
    }
    if args.oracle {
        let surface = ProductSurface::unit(x.len())?;
        let best = surface_min_oracle(&surface, args.width, args.samples)?;
        payload["oracle"] = json!({
            "point": best.point,
            "value": best.value,
            "log_step": best.log_step,
            "evaluated": best.evaluated,
        });
    }
    Ok(CommandResult::ok(payload))
}

fn describe_cubic(c: &Cubic) -> Value {
    let check = cross_check_roots(c);
    json!({
        "cubic": c.to_string(),
        "coefficients": c.coefficients(),
        "discriminant": check.discriminant.discriminant,
        "sturm_count": check.sturm.count,
        "discriminant_count": check.discriminant.count,
        "agree": check.agree,
        "borderline": check.sturm.borderline,
    })
}

pub fn cmd_rootcount(args: &RootcountArgs, ctx: &Context) -> CmdResult {
    if let Some(base) = &args.base {
        let (x, y) = pair(base, "--base")?;
        let c = vertical_line_cubic(x, y)?;
        let mut payload = describe_cubic(&c);
        payload["base"] = json!([x, y]);
        payload["surface_roots"] = json!(count_surface_roots(x, y)?);
        return Ok(CommandResult::ok(payload));
    }
    if let Some(coeffs) = &args.cubic {
        let [c3, c2, c1, c0] = coeffs[..] else {
            return Err(Failure::Usage(
                "--cubic takes exactly four values c3,c2,c1,c0".into(),
            ));
        };
        return Ok(CommandResult::ok(describe_cubic(&Cubic::new(
            c3, c2, c1, c0,
        )?)));
    }
    let Some(count) = args.sweep else {
        return Err(Failure::Usage(
            "give --base x,y, --cubic c3,c2,c1,c0 or --sweep N".into(),
        ));
    };

    let mut rng = seeded(ctx.seed);
    let mut tally = [0usize; 4];
    let (mut disagreements, mut borderline, mut surface_not_one) = (0usize, 0usize, 0usize);
    let mut first_multiple: Option<[f64; 2]> = None;
    for _ in 0..count {
        let p = uniform_vector(&mut rng, 2, -50.0, 50.0);
        let c = vertical_line_cubic(p[0], p[1])?;
        let check = cross_check_roots(&c);
        tally[check.sturm.count as usize] += 1;
        disagreements += usize::from(!check.agree);
        borderline += usize::from(check.sturm.borderline);
        if check.sturm.count > 1 && first_multiple.is_none() {
            first_multiple = Some([p[0], p[1]]);
        }
        if count_surface_roots(p[0], p[1])? != 1 {
            surface_not_one += 1;
        }
    }
    let mut result = CommandResult::ok(json!({
        "samples": count,
        "seed": ctx.seed,
        "one_real_root": tally[1],
        "two_real_roots": tally[2],
        "three_real_roots": tally[3],
        "disagreements": disagreements,
        "borderline": borderline,
        "surface_roots_not_one": surface_not_one,
        "first_multiple_root_base": first_multiple,
    }));
    if tally[2] + tally[3] > 0 {
        result = result.with_diagnostic(format!(
            "{} of {count} base points give more than one real root; exactly one lies on the positive branch in all but {surface_not_one}",
            tally[2] + tally[3]
        ));
    }
    Ok(result)
}

pub fn cmd_height(args: &HeightArgs) -> CmdResult {
    let (x, y) = pair(&args.base, "--base")?;
    let h = surface_height(x, y)?;
    let plane = LinearFunctional::new(vec![1.0, 1.0, 1.0])?;
    Ok(CommandResult::ok(json!({
        "base": [x, y, -x - y],
        "t": h.t,
        "point": h.point,
        "product": h.point.iter().product::<f64>(),
        "residual": h.residual,
        "iterations": h.iterations,
        "signed_distance": plane.signed_distance(&h.point)?,
    })))
}

pub fn cmd_hessian(args: &HessianArgs, ctx: &Context) -> CmdResult {
    let mut payload = json!({});
    if let Some(at) = &args.at {
        let (x, y) = pair(at, "--at")?;
        let m = hessian_of_g(x, y)?;
        let (m11, det) = leading_minors(&m);
        payload["at"] = json!([x, y]);
        payload["matrix"] = json!([[m[(0, 0)], m[(0, 1)]], [m[(1, 0)], m[(1, 1)]]]);
        payload["minors"] = json!([m11, det]);
        payload["positive_definite"] = json!(is_positive_definite(&m)?);
    }
    if args.grid {
        let m = ctx.resolution.max(2);
        let step = (1e2_f64.ln() - 1e-2_f64.ln()) / (m - 1) as f64;
        let axis: Vec<f64> = (0..m)
            .map(|i| (1e-2_f64.ln() + step * i as f64).exp())
            .collect();
        let mut failures = 0usize;
        for &x in &axis {
            for &y in &axis {
                if !is_positive_definite(&hessian_of_g(x, y)?)? {
                    failures += 1;
                }
            }
        }
        payload["grid"] = json!({
            "points": m * m,
            "not_positive_definite": failures,
            "all_positive_definite": failures == 0,
        });
    }
    Ok(CommandResult::ok(payload))
}

pub fn cmd_plotdata(args: &PlotDataArgs, ctx: &Context) -> CmdResult {
    let res = ctx.resolution.max(2);
    let table = match args.figure {
        1 => plot::figure1(
            &LinearFunctional::new(args.coeffs.0.clone())?,
            res,
            ctx.seed,
        ),
        2 => plot::figure2(res),
        _ => plot::figure3(res),
    };
    let io_err = |e: &dyn std::fmt::Display| Failure::Io(format!("{}: {e}", args.out.display()));
    let file = File::create(&args.out).map_err(|e| io_err(&e))?;
    table
        .write_csv(BufWriter::new(file))
        .map_err(|e| io_err(&e))?;
    Ok(CommandResult::ok(json!({
        "figure": args.figure,
        "out": args.out.display().to_string(),
        "columns": table.header,
        "rows": table.rows.len(),
    })))
}
