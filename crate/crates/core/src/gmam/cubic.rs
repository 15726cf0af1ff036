//! Real cubics, exact real-root counting and the vertical-line cubic of the
//! surface `xyz = 1` over the plane `x + y + z = 0`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Float, One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// `c3 t³ + c2 t² + c1 t + c0` with `c3 ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Cubic {
    c3: f64,
    c2: f64,
    c1: f64,
    c0: f64,
}

impl Cubic {
    pub fn new(c3: f64, c2: f64, c1: f64, c0: f64) -> Result<Self> {
        if ![c3, c2, c1, c0].iter().all(|c| c.is_finite()) {
            return Err(Error::NonFinite);
        }
        if c3 == 0.0 {
            return Err(Error::DegenerateLeadingCoefficient);
        }
        Ok(Cubic { c3, c2, c1, c0 })
    }

    /// Coefficients from the leading one down.
    pub fn coefficients(&self) -> [f64; 4] {
        [self.c3, self.c2, self.c1, self.c0]
    }

    pub fn eval(&self, t: f64) -> f64 {
        ((self.c3 * t + self.c2) * t + self.c1) * t + self.c0
    }

    pub fn derivative_at(&self, t: f64) -> f64 {
        (3.0 * self.c3 * t + 2.0 * self.c2) * t + self.c1
    }

    /// Cauchy bound `1 + max|cᵢ| / |c3|`; every real root lies strictly
    /// inside `(−B, B)`.
    pub fn cauchy_bound(&self) -> f64 {
        1.0 + [self.c2, self.c1, self.c0]
            .iter()
            .fold(0.0_f64, |m, c| m.max(c.abs()))
            / self.c3.abs()
    }

    /// `Δ = 18c₃c₂c₁c₀ − 4c₂³c₀ + c₂²c₁² − 4c₃c₁³ − 27c₃²c₀²` in binary64,
    /// with the sum of the magnitudes of its terms.
    fn discriminant_f64(&self) -> (f64, f64) {
        let Cubic { c3, c2, c1, c0 } = *self;
        let terms = [
            18.0 * c3 * c2 * c1 * c0,
            -4.0 * c2.powi(3) * c0,
            c2 * c2 * c1 * c1,
            -4.0 * c3 * c1.powi(3),
            -27.0 * c3 * c3 * c0 * c0,
        ];
        (terms.iter().sum(), terms.iter().map(|t| t.abs()).sum())
    }

    /// `Δ` rounded once from its exact value.
    pub fn discriminant(&self) -> f64 {
        let exact = self.exact();
        exact.delta_to_f64(&exact.discriminant())
    }

    fn exact(&self) -> Scaled {
        Scaled::new([self.c0, self.c1, self.c2, self.c3])
    }
}

impl std::fmt::Display for Cubic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let magnitude = |c: f64, power: &str| {
            if c.abs() == 1.0 && !power.is_empty() {
                power.to_string()
            } else {
                format!("{}{power}", c.abs())
            }
        };
        let sign = if self.c3 < 0.0 { "-" } else { "" };
        write!(f, "{sign}{}", magnitude(self.c3, "t^3"))?;
        for (c, power) in [(self.c2, "t^2"), (self.c1, "t"), (self.c0, "")] {
            if c != 0.0 {
                let sign = if c < 0.0 { '-' } else { '+' };
                write!(f, " {sign} {}", magnitude(c, power))?;
            }
        }
        Ok(())
    }
}

/// The cubic scaled by a power of two so that every coefficient is an
/// integer: the true coefficients are `coeffs[i]·2^shift`, lowest first.
/// Scaling by a positive constant moves neither the roots nor any sign.
struct Scaled {
    coeffs: [BigInt; 4],
    shift: i32,
}

impl Scaled {
    fn new(c: [f64; 4]) -> Self {
        let parts = c.map(|v| {
            let (mantissa, exponent, sign) = v.integer_decode();
            (
                BigInt::from(sign) * BigInt::from(mantissa),
                i32::from(exponent),
            )
        });
        let shift = parts
            .iter()
            .filter(|(m, _)| !m.is_zero())
            .map(|&(_, e)| e)
            .min()
            .unwrap_or(0);
        let coeffs = parts.map(|(m, e)| {
            if m.is_zero() {
                m
            } else {
                m << (e - shift) as usize
            }
        });
        Scaled { coeffs, shift }
    }

    fn discriminant(&self) -> BigInt {
        let [c0, c1, c2, c3] = &self.coeffs;
        BigInt::from(18) * c3 * c2 * c1 * c0 - BigInt::from(4) * c2 * c2 * c2 * c0
            + c2 * c2 * c1 * c1
            - BigInt::from(4) * c3 * c1 * c1 * c1
            - BigInt::from(27) * c3 * c3 * c0 * c0
    }

    /// The true discriminant is `d·2^(4·shift)`.
    fn delta_to_f64(&self, d: &BigInt) -> f64 {
        let e = 4 * self.shift;
        let power = BigInt::one() << e.unsigned_abs() as usize;
        let exact = if e >= 0 {
            BigRational::from_integer(d * power)
        } else {
            BigRational::new(d.clone(), power)
        };
        exact.to_f64().unwrap_or(f64::NAN)
    }

    fn poly(&self) -> Poly {
        Poly(self.coeffs.to_vec()).trimmed()
    }

    /// `B = 1 + max|cᵢ|/|c₃|` as a fraction.
    fn cauchy_bound(&self) -> Point {
        let [c0, c1, c2, c3] = &self.coeffs;
        let max = [c0, c1, c2].into_iter().map(|v| v.abs()).max().unwrap();
        let den = c3.abs();
        Point {
            num: &den + max,
            den,
        }
    }
}

/// An exact rational `num/den` with `den > 0`.
#[derive(Debug, Clone)]
struct Point {
    num: BigInt,
    den: BigInt,
}

impl Point {
    fn from_f64(x: f64) -> Self {
        let r = BigRational::from_float(x).expect("finite endpoint");
        Point {
            num: r.numer().clone(),
            den: r.denom().clone(),
        }
    }

    fn neg(&self) -> Self {
        Point {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

/// Dense integer polynomial, lowest degree first.
#[derive(Debug, Clone, PartialEq)]
struct Poly(Vec<BigInt>);

impl Poly {
    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn derivative(&self) -> Poly {
        Poly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
        .trimmed()
    }

    /// `k·self mod divisor` for some `k > 0`. Multiplying each step by
    /// `|lead|` rather than `lead` keeps `k` positive, so signs match the
    /// rational remainder.
    fn prem(&self, divisor: &Poly) -> Poly {
        let mut r = self.0.clone();
        let d = &divisor.0;
        let lead = d.last().expect("nonzero divisor");
        let (scale, sign) = (lead.abs(), lead.signum());
        while r.len() >= d.len() && !r.is_empty() {
            let shift = r.len() - d.len();
            let q = r.last().unwrap() * &sign;
            for c in r.iter_mut() {
                *c *= &scale;
            }
            for (i, c) in d.iter().enumerate() {
                r[shift + i] -= &q * c;
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Poly(r)
    }

    /// Sign of `p(num/den)`, from the homogenised `den^deg · p(num/den)`.
    fn sign_at(&self, x: &Point) -> i8 {
        let mut acc = BigInt::zero();
        let mut den_power = BigInt::one();
        for c in self.0.iter().rev() {
            acc = acc * &x.num + c * &den_power;
            den_power *= &x.den;
        }
        match acc.sign() {
            num::bigint::Sign::Plus => 1,
            num::bigint::Sign::Minus => -1,
            num::bigint::Sign::NoSign => 0,
        }
    }
}

/// Sturm chain `p, p', −rem(p, p'), …`, each term scaled by a positive
/// integer so the arithmetic stays in the integers.
struct SturmChain(Vec<Poly>);

impl SturmChain {
    fn new(p: Poly) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        while !chain.last().unwrap().is_zero() {
            let n = chain.len();
            let r = chain[n - 2].prem(&chain[n - 1]);
            chain.push(Poly(r.0.into_iter().map(|c| -c).collect()));
        }
        chain.pop();
        SturmChain(chain)
    }

    fn variations(&self, x: &Point) -> usize {
        let signs: Vec<i8> = self
            .0
            .iter()
            .map(|p| p.sign_at(x))
            .filter(|&s| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Distinct real roots in `(lo, hi]`.
    fn count(&self, lo: &Point, hi: &Point) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RootMethod {
    Sturm,
    Discriminant,
}

/// Number of distinct real roots of a cubic.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootCount {
    pub count: u8,
    pub method: RootMethod,
    /// Present when `method` is `Discriminant`.
    pub discriminant: Option<f64>,
    /// Set when `|Δ|` is within `1e-12` of the size of its terms, i.e. the
    /// cubic is at or near a repeated root.
    pub borderline: bool,
}

fn is_borderline(c: &Cubic, delta: f64) -> bool {
    let (_, scale) = c.discriminant_f64();
    delta.abs() <= 1e-12 * scale
}

/// Distinct real roots by Sturm's theorem, evaluated exactly at `±B` with
/// `B` the Cauchy root bound.
pub fn count_real_roots(c: &Cubic) -> RootCount {
    let exact = c.exact();
    let bound = exact.cauchy_bound();
    let count = SturmChain::new(exact.poly()).count(&bound.neg(), &bound);
    RootCount {
        count: count as u8,
        method: RootMethod::Sturm,
        discriminant: None,
        borderline: is_borderline(c, exact.delta_to_f64(&exact.discriminant())),
    }
}

/// Distinct real roots in the half-open interval `(lo, hi]`.
pub fn count_real_roots_in(c: &Cubic, lo: f64, hi: f64) -> usize {
    if !(lo < hi) {
        return 0;
    }
    SturmChain::new(c.exact().poly()).count(&Point::from_f64(lo), &Point::from_f64(hi))
}

/// Distinct real roots from the sign of the discriminant: one for `Δ < 0`,
/// three for `Δ > 0`; for `Δ = 0` two, or one when the root is triple.
pub fn count_real_roots_by_discriminant(c: &Cubic) -> RootCount {
    let exact = c.exact();
    let delta = exact.discriminant();
    let count = if delta.is_negative() {
        1
    } else if delta.is_positive() {
        3
    } else {
        // Triple root iff c2² = 3 c1 c3.
        let [_, c1, c2, c3] = &exact.coeffs;
        if c2 * c2 == BigInt::from(3) * c1 * c3 {
            1
        } else {
            2
        }
    };
    let value = exact.delta_to_f64(&delta);
    RootCount {
        count,
        method: RootMethod::Discriminant,
        discriminant: Some(value),
        borderline: is_borderline(c, value),
    }
}

/// Both counts for one cubic and whether they agree.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootCheck {
    pub sturm: RootCount,
    pub discriminant: RootCount,
    pub agree: bool,
}

pub fn cross_check_roots(c: &Cubic) -> RootCheck {
    let sturm = count_real_roots(c);
    let discriminant = count_real_roots_by_discriminant(c);
    RootCheck {
        agree: sturm.count == discriminant.count,
        sturm,
        discriminant,
    }
}

/// The line through the base point `(x, y, −x−y)` of the plane
/// `x + y + z = 0`, in direction `(1, 1, 1)`: `P(t) = (x+t, y+t, −x−y+t)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VerticalLine {
    pub x: f64,
    pub y: f64,
}

impl VerticalLine {
    pub fn base_point(&self) -> [f64; 3] {
        [self.x, self.y, -self.x - self.y]
    }

    pub fn point(&self, t: f64) -> [f64; 3] {
        [self.x + t, self.y + t, t - (self.x + self.y)]
    }

    /// `(x+t)(y+t)(−x−y+t) − 1`, in unexpanded form.
    pub fn residual(&self, t: f64) -> f64 {
        let [a, b, c] = self.point(t);
        a * b * c - 1.0
    }

    fn residual_derivative(&self, t: f64) -> f64 {
        let [a, b, c] = self.point(t);
        b * c + a * c + a * b
    }

    /// Parameter beyond which all three coordinates of `P(t)` are positive.
    pub fn positivity_threshold(&self) -> f64 {
        (-self.x).max(-self.y).max(self.x + self.y)
    }

    /// Expanded: `t³ − (x² + xy + y²) t − xy(x + y) − 1`.
    pub fn cubic(&self) -> Cubic {
        let (x, y) = (self.x, self.y);
        let c1 = -(x * x + x * y + y * y) + 0.0;
        let c0 = -(x * y * (x + y)) - 1.0;
        Cubic::new(1.0, 0.0, c1, c0).expect("monic cubic")
    }
}

pub fn vertical_line_cubic(x: f64, y: f64) -> Result<Cubic> {
    if !(x.is_finite() && y.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(VerticalLine { x, y }.cubic())
}

/// Roots of the vertical-line cubic whose point lies in the positive octant.
pub fn count_surface_roots(x: f64, y: f64) -> Result<usize> {
    let cubic = vertical_line_cubic(x, y)?;
    let line = VerticalLine { x, y };
    let lo = line.positivity_threshold();
    let hi = cubic.cauchy_bound().max(lo + 1.0);
    Ok(count_real_roots_in(&cubic, lo, hi))
}

/// Where the vertical line through a base point meets `xyz = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SurfaceHeight {
    pub t: f64,
    pub point: [f64; 3],
    /// `|cubic(t)|` for the expanded cubic.
    pub residual: f64,
    pub iterations: usize,
}

const MAX_ITERATIONS: usize = 100;

/// Height of the surface `xyz = 1` (positive octant) above the base point
/// `(x, y, −x−y)`, measured in the line parameter `t` of
/// [`VerticalLine::point`].
///
/// On `t > max(−x, −y, x+y)` the unexpanded residual increases from `−1` to
/// `+∞`, so the root there is unique. It is bracketed between that threshold
/// and the smaller of the Cauchy bound and threshold + 1, then refined by
/// Newton steps with a bisection fallback. Fails with `NoSurfacePoint` when
/// the surface point is not representable, e.g. a coordinate underflows the
/// spacing of binary64 near a large base point.
pub fn surface_height(x: f64, y: f64) -> Result<SurfaceHeight> {
    let cubic = vertical_line_cubic(x, y)?;
    let line = VerticalLine { x, y };

    let mut lo = line.positivity_threshold();
    // At lo + 1 every factor is at least 1, so the residual is nonnegative.
    let mut hi = cubic.cauchy_bound().min(lo + 1.0);
    while line.residual(hi) < 0.0 {
        hi = lo + 2.0 * (hi - lo);
        if !hi.is_finite() {
            return Err(Error::NoSurfacePoint { x, y });
        }
    }

    let mut t = hi;
    let mut iterations = 0;
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        let r = line.residual(t);
        if r == 0.0 {
            break;
        }
        if r < 0.0 {
            lo = t;
        } else {
            hi = t;
        }
        let d = line.residual_derivative(t);
        let newton = t - r / d;
        let next = if d > 0.0 && newton >= lo && newton <= hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        let converged = (next - t).abs() <= 2.0 * f64::EPSILON * t.abs().max(1.0);
        t = next;
        if converged || hi - lo <= f64::EPSILON * hi.abs() {
            break;
        }
    }

    let point = line.point(t);
    if point.iter().any(|&c| !(c > 0.0)) {
        return Err(Error::NoSurfacePoint { x, y });
    }
    Ok(SurfaceHeight {
        t,
        point,
        residual: cubic.eval(t).abs(),
        iterations,
    })
}
