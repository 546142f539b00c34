//! The power-ratio locus of two circles.
//!
//! For circles `G1`, `G2` and a ratio `k = num : den`, the locus is the set of
//! points `X` with `den * P1(X) = num * P2(X)`, where `Pi` is the power with
//! respect to `Gi`. Except for `k = 1` (a line, the radical axis) it is a
//! circle whose center lies on the line of centers at signed position
//! `k / (k - 1) * d` from `O1`, with squared radius
//!
//! ```text
//!   r^2 = (k r2^2 - r1^2) / (k - 1) + k d^2 / (k - 1)^2
//! ```
//!
//! When `r^2` vanishes the locus shrinks to its center, and when it is negative
//! the locus is empty. Ratios are kept projective so that `k = 0` (the circle
//! `G1`) and `k = inf` (the circle `G2`) need no special handling by callers.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geom::{Circle, Line, Point, Tolerance};
use crate::power::{power, radical_axis};

/// The ratio `k = num / den` as a projective pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerRatio {
    num: f64,
    den: f64,
}

impl PowerRatio {
    /// `(1 : 0)`, whose locus is the second circle.
    pub const INFINITE: PowerRatio = PowerRatio { num: 1.0, den: 0.0 };
    pub const ONE: PowerRatio = PowerRatio { num: 1.0, den: 1.0 };

    pub fn new(num: f64, den: f64) -> Result<Self> {
        if !num.is_finite() || !den.is_finite() || (num == 0.0 && den == 0.0) {
            return Err(Error::InvalidRatio);
        }
        Ok(PowerRatio { num, den })
    }

    pub fn finite(k: f64) -> Result<Self> {
        Self::new(k, 1.0)
    }

    #[inline]
    pub fn num(&self) -> f64 {
        self.num
    }

    #[inline]
    pub fn den(&self) -> f64 {
        self.den
    }

    /// `num / den`, or `None` for the point at infinity.
    pub fn value(&self) -> Option<f64> {
        (self.den != 0.0).then(|| self.num / self.den)
    }

    /// `(den : num)`, the ratio seen with the circles swapped.
    pub fn inverse(&self) -> PowerRatio {
        PowerRatio {
            num: self.den,
            den: self.num,
        }
    }

    /// Representative with the larger component positive and in `[1, 2)`.
    ///
    /// Only a power of two and a sign are applied, so the rescaling is exact.
    pub fn normalized(&self) -> (f64, f64) {
        let (n, d) = (self.num, self.den);
        let lead = if d.abs() >= n.abs() { d } else { n };
        let e = lead.abs().log2().floor() as i32;
        let s = 2f64.powi(-e).copysign(lead);
        (n * s, d * s)
    }

    /// Equality of ratios by cross-multiplication.
    pub fn approx_eq(&self, other: &PowerRatio, tol: Tolerance) -> bool {
        let (a, b) = self.normalized();
        let (c, d) = other.normalized();
        (a * d - b * c).abs() <= tol.bound(1.0)
    }

    /// Whether `k` is within tolerance of 1.
    pub fn is_unit(&self, tol: Tolerance) -> bool {
        let (p, q) = self.normalized();
        (p - q).abs() <= tol.bound(p.abs().max(q.abs()))
    }
}

impl fmt::Display for PowerRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1.0 {
            write!(f, "{}", self.num)
        } else if self.den == 0.0 {
            f.write_str("inf")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Accepts `"p/q"`, a plain decimal (`q = 1`), or `"inf"` for `(1 : 0)`.
impl FromStr for PowerRatio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") {
            return Ok(PowerRatio::INFINITE);
        }
        let num = |t: &str| -> Result<f64> {
            let t = t.trim();
            // Rust's parser also takes "inf"/"nan" spellings; only plain decimals here.
            if t.is_empty()
                || t.chars()
                    .any(|c| c.is_ascii_alphabetic() && c != 'e' && c != 'E')
            {
                return Err(Error::InvalidRatio);
            }
            t.parse::<f64>().map_err(|_| Error::InvalidRatio)
        };
        match s.split_once('/') {
            Some((p, q)) => PowerRatio::new(num(p)?, num(q)?),
            None => PowerRatio::new(num(s)?, 1.0),
        }
    }
}

/// A possibly degenerate power-ratio locus.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Locus {
    /// Radius strictly positive.
    RealCircle(Circle),
    Line(Line),
    SinglePoint(Point),
    Empty,
    WholePlane,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LocusKind {
    RealCircle,
    Line,
    SinglePoint,
    Empty,
    WholePlane,
}

impl fmt::Display for LocusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LocusKind::RealCircle => "circle",
            LocusKind::Line => "line",
            LocusKind::SinglePoint => "point",
            LocusKind::Empty => "empty",
            LocusKind::WholePlane => "whole plane",
        })
    }
}

impl Locus {
    pub fn kind(&self) -> LocusKind {
        match self {
            Locus::RealCircle(_) => LocusKind::RealCircle,
            Locus::Line(_) => LocusKind::Line,
            Locus::SinglePoint(_) => LocusKind::SinglePoint,
            Locus::Empty => LocusKind::Empty,
            Locus::WholePlane => LocusKind::WholePlane,
        }
    }

    pub fn as_circle(&self) -> Option<&Circle> {
        match self {
            Locus::RealCircle(c) => Some(c),
            _ => None,
        }
    }

    /// Center of a circle or point locus.
    pub fn center(&self) -> Option<Point> {
        match self {
            Locus::RealCircle(c) => Some(c.center),
            Locus::SinglePoint(p) => Some(*p),
            _ => None,
        }
    }

    /// Distance from `p` to the locus; zero everywhere for the whole plane and
    /// infinite for the empty set.
    pub fn distance_to(&self, p: Point) -> f64 {
        match self {
            Locus::RealCircle(c) => (p.dist(c.center) - c.radius).abs(),
            Locus::Line(l) => l.signed_distance(p).abs(),
            Locus::SinglePoint(q) => p.dist(*q),
            Locus::Empty => f64::INFINITY,
            Locus::WholePlane => 0.0,
        }
    }

    pub fn approx_eq(&self, other: &Locus, tol: Tolerance) -> bool {
        match (self, other) {
            (Locus::RealCircle(a), Locus::RealCircle(b)) => a.approx_eq(b, tol),
            (Locus::Line(a), Locus::Line(b)) => {
                let scale = a.offset().abs().max(b.offset().abs());
                a.approx_eq(b, tol, scale)
            }
            (Locus::SinglePoint(a), Locus::SinglePoint(b)) => {
                a.dist(*b) <= tol.bound(a.norm().max(b.norm()))
            }
            (Locus::Empty, Locus::Empty) | (Locus::WholePlane, Locus::WholePlane) => true,
            _ => false,
        }
    }
}

/// Critical ratios at which the locus shrinks to a single point: roots of
/// `r2^2 k^2 + (d^2 - r1^2 - r2^2) k + r1^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KThresholds {
    /// Locus is empty strictly between the roots, a circle outside them.
    TwoRoots { k_minus: f64, k_plus: f64 },
    /// Tangent circles.
    DoubleRoot(f64),
    /// The circles cross at two points: every `k != 1` gives a circle.
    NoRealRoots,
    /// `r2 = 0`: the quadratic drops to the linear `(d^2 - r1^2) k + r1^2`.
    LinearCase(f64),
}

/// `(P1(A) : P2(A))`, the ratio that puts `a` on its own locus.
pub fn power_ratio_of_point(
    a: Point,
    c1: &Circle,
    c2: &Circle,
    tol: Tolerance,
) -> Result<PowerRatio> {
    let p1 = power(c1, a);
    let p2 = power(c2, a);
    let scale = c1
        .radius
        .max(c2.radius)
        .max(a.dist(c1.center))
        .max(a.dist(c2.center));
    let band = tol.bound(scale * scale);
    if p1.abs() <= band && p2.abs() <= band {
        return Err(Error::IndeterminateRatio);
    }
    PowerRatio::new(p1, p2)
}

/// `den * P1(x) - num * P2(x)` for the normalized ratio; zero on the locus.
pub fn locus_residual(c1: &Circle, c2: &Circle, k: PowerRatio, x: Point) -> f64 {
    let (p, q) = k.normalized();
    q * power(c1, x) - p * power(c2, x)
}

/// Center (possibly far away) and squared radius of the locus for a ratio not
/// equal to one.
fn center_and_radius2(c1: &Circle, c2: &Circle, p: f64, q: f64) -> (Point, f64) {
    let delta = c2.center - c1.center;
    let d2 = delta.norm2();
    let w = p - q;
    let center = c1.center + delta * (p / w);
    let (r1s, r2s) = (c1.radius * c1.radius, c2.radius * c2.radius);
    let numerator = p * q * d2 + (p * r2s - q * r1s) * w;
    (center, numerator / (w * w))
}

fn pair_scale(c1: &Circle, c2: &Circle) -> f64 {
    c1.center.dist(c2.center).max(c1.radius).max(c2.radius)
}

fn circle_or_point(c: &Circle) -> Locus {
    if c.radius > 0.0 {
        Locus::RealCircle(*c)
    } else {
        Locus::SinglePoint(c.center)
    }
}

/// The locus `P1(X) = k P2(X)`.
pub fn generalized_locus(c1: &Circle, c2: &Circle, k: PowerRatio, tol: Tolerance) -> Result<Locus> {
    let (p, q) = k.normalized();
    if q == 0.0 {
        return Ok(circle_or_point(c2));
    }
    if p == 0.0 {
        return Ok(circle_or_point(c1));
    }
    let scale = pair_scale(c1, c2);
    let d = c1.center.dist(c2.center);
    if k.is_unit(tol) {
        if d > tol.bound(scale) {
            return radical_axis(c1, c2, tol).map(Locus::Line);
        }
        let (r1, r2) = (c1.radius, c2.radius);
        return Ok(
            if ((r1 - r2) * (r1 + r2)).abs() <= tol.bound(scale * scale) {
                Locus::WholePlane
            } else {
                Locus::Empty
            },
        );
    }
    let (center, r2) = center_and_radius2(c1, c2, p, q);
    let theta = tol.bound(scale * scale);
    Ok(if r2 > theta {
        Locus::RealCircle(Circle::try_new(center, r2.sqrt())?)
    } else if r2 >= -theta {
        Locus::SinglePoint(center)
    } else {
        Locus::Empty
    })
}

/// Tag of [`generalized_locus`] on the same inputs.
pub fn classify(c1: &Circle, c2: &Circle, k: PowerRatio, tol: Tolerance) -> Result<LocusKind> {
    generalized_locus(c1, c2, k, tol).map(|l| l.kind())
}

pub fn k_thresholds(c1: &Circle, c2: &Circle, tol: Tolerance) -> KThresholds {
    let d = c1.center.dist(c2.center);
    let (r1, r2) = (c1.radius, c2.radius);
    let scale = d.max(r1).max(r2);
    let a = r2 * r2;
    let b = (d - r1) * (d + r1) - a;
    let c = r1 * r1;
    if r2 <= tol.bound(scale) {
        return if b.abs() <= tol.bound(scale * scale) {
            KThresholds::NoRealRoots
        } else {
            KThresholds::LinearCase(-c / b)
        };
    }
    // (d^2 - (r1 + r2)^2)(d^2 - (r1 - r2)^2), exact at tangency
    let disc = (d - r1 - r2) * (d + r1 + r2) * (d - r1 + r2) * (d + r1 - r2);
    let s2 = scale * scale;
    let band = tol.bound(s2 * s2);
    if disc < -band {
        return KThresholds::NoRealRoots;
    }
    if disc <= band {
        return KThresholds::DoubleRoot(-b / (2.0 * a));
    }
    let t = -0.5 * (b + disc.sqrt().copysign(b));
    let (x, y) = (t / a, c / t);
    KThresholds::TwoRoots {
        k_minus: x.min(y),
        k_plus: x.max(y),
    }
}

/// `K_A(G1, G2)`: the locus through `a` for its own power ratio.
pub fn apollonius_of_point(a: Point, c1: &Circle, c2: &Circle, tol: Tolerance) -> Result<Locus> {
    let k = power_ratio_of_point(a, c1, c2, tol)?;
    generalized_locus(c1, c2, k, tol)
}
