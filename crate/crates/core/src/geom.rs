//! Points, circles, canonical lines and the handful of exact-formula
//! constructions everything else is built from.
//!
//! Every predicate takes an explicit [`Tolerance`]. Comparisons have the form
//! `|x - y| <= eps_abs + eps_rel * magnitude`, where the caller supplies the
//! characteristic magnitude of the quantity being compared (a length, an area,
//! a squared length, ...).

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Absolute/relative tolerance pair used by all predicates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub eps_abs: f64,
    pub eps_rel: f64,
}

impl Tolerance {
    pub const DEFAULT: Tolerance = Tolerance {
        eps_abs: 1e-9,
        eps_rel: 1e-9,
    };

    pub fn new(eps_abs: f64, eps_rel: f64) -> Result<Self> {
        let ok = |e: f64| e.is_finite() && e > 0.0;
        if ok(eps_abs) && ok(eps_rel) {
            Ok(Tolerance { eps_abs, eps_rel })
        } else {
            Err(Error::InvalidTolerance)
        }
    }

    /// Same value for the absolute and relative parts.
    pub fn uniform(eps: f64) -> Result<Self> {
        Self::new(eps, eps)
    }

    /// Allowed deviation for a quantity of the given magnitude.
    #[inline]
    pub fn bound(&self, magnitude: f64) -> f64 {
        self.eps_abs + self.eps_rel * magnitude.abs()
    }

    #[inline]
    pub fn is_zero(&self, x: f64, magnitude: f64) -> bool {
        x.abs() <= self.bound(magnitude)
    }

    #[inline]
    pub fn approx_eq(&self, a: f64, b: f64, magnitude: f64) -> bool {
        (a - b).abs() <= self.bound(magnitude)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::DEFAULT
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn try_new(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Point { x, y })
        } else {
            Err(Error::NonFinite)
        }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    #[inline]
    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    #[inline]
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm2(self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn dist2(self, other: Point) -> f64 {
        (self - other).norm2()
    }

    #[inline]
    pub fn dist(self, other: Point) -> f64 {
        (self - other).norm()
    }

    /// Counter-clockwise quarter turn.
    #[inline]
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn midpoint(self, other: Point) -> Point {
        Point::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    /// Ascending y, then ascending x.
    pub fn cmp_yx(&self, other: &Point) -> Ordering {
        self.y.total_cmp(&other.y).then(self.x.total_cmp(&other.x))
    }
}

impl Add for Point {
    type Output = Point;
    #[inline]
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    #[inline]
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    #[inline]
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

impl Neg for Point {
    type Output = Point;
    #[inline]
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// A circle with nonnegative radius. Radius zero is a point-circle, whose
/// power function is the squared distance to its center.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

impl Circle {
    /// Panics on a negative or non-finite radius; see [`Circle::try_new`].
    pub fn new(center: Point, radius: f64) -> Self {
        match Self::try_new(center, radius) {
            Ok(c) => c,
            Err(e) => panic!("invalid circle: {e}"),
        }
    }

    pub fn try_new(center: Point, radius: f64) -> Result<Self> {
        if !center.is_finite() || !radius.is_finite() {
            return Err(Error::NonFinite);
        }
        if radius < 0.0 {
            return Err(Error::NegativeRadius(radius));
        }
        Ok(Circle { center, radius })
    }

    pub fn point_circle(center: Point) -> Self {
        Circle::new(center, 0.0)
    }

    /// Point on the circle at the given angle (radians, from +x).
    pub fn point_at(&self, angle: f64) -> Point {
        let (s, c) = angle.sin_cos();
        Point::new(
            self.center.x + self.radius * c,
            self.center.y + self.radius * s,
        )
    }

    pub fn approx_eq(&self, other: &Circle, tol: Tolerance) -> bool {
        let scale = self
            .radius
            .max(other.radius)
            .max(self.center.norm())
            .max(other.center.norm());
        self.center.dist(other.center) <= tol.bound(scale)
            && tol.approx_eq(self.radius, other.radius, scale)
    }
}

/// A line `{X : n . X = offset}` with unit normal `n` in canonical orientation
/// (`nx > 0`, or `nx == 0` and `ny > 0`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    nx: f64,
    ny: f64,
    offset: f64,
}

impl Line {
    /// Builds the line `nx*x + ny*y = offset`; the normal need not be unit.
    pub fn new(nx: f64, ny: f64, offset: f64) -> Result<Self> {
        if !(nx.is_finite() && ny.is_finite() && offset.is_finite()) {
            return Err(Error::NonFinite);
        }
        let len = nx.hypot(ny);
        if len == 0.0 {
            return Err(Error::CoincidentPoints);
        }
        Ok(Self::canonical(nx / len, ny / len, offset / len))
    }

    fn canonical(nx: f64, ny: f64, offset: f64) -> Self {
        let flip = nx < 0.0 || (nx == 0.0 && ny < 0.0);
        let s = if flip { -1.0 } else { 1.0 };
        // `+ 0.0` turns a negative zero into a positive one.
        Line {
            nx: s * nx + 0.0,
            ny: s * ny + 0.0,
            offset: s * offset + 0.0,
        }
    }

    /// Line through `p` with the given normal direction.
    pub fn through_point(p: Point, normal: Point) -> Result<Self> {
        Self::new(normal.x, normal.y, normal.dot(p))
    }

    #[inline]
    pub fn normal(&self) -> Point {
        Point::new(self.nx, self.ny)
    }

    #[inline]
    pub fn offset(&self) -> f64 {
        self.offset
    }

    /// Unit direction vector (normal rotated a quarter turn clockwise).
    pub fn direction(&self) -> Point {
        Point::new(self.ny, -self.nx)
    }

    /// Signed distance `n . p - offset`.
    #[inline]
    pub fn signed_distance(&self, p: Point) -> f64 {
        self.nx * p.x + self.ny * p.y - self.offset
    }

    /// Orthogonal projection of `p` onto the line.
    pub fn project(&self, p: Point) -> Point {
        p - self.normal() * self.signed_distance(p)
    }

    /// Largest coefficient difference to `other`, taking the better of the two
    /// normal orientations (the canonical flip is discontinuous at `nx = 0`).
    pub fn coefficient_distance(&self, other: &Line) -> f64 {
        let same = (self.nx - other.nx)
            .abs()
            .max((self.ny - other.ny).abs())
            .max((self.offset - other.offset).abs());
        let flipped = (self.nx + other.nx)
            .abs()
            .max((self.ny + other.ny).abs())
            .max((self.offset + other.offset).abs());
        same.min(flipped)
    }

    /// Normals agree within `tol.bound(1)` and offsets within `tol.bound(scale)`.
    pub fn approx_eq(&self, other: &Line, tol: Tolerance, scale: f64) -> bool {
        let check = |s: f64| {
            (self.nx - s * other.nx).abs() <= tol.bound(1.0)
                && (self.ny - s * other.ny).abs() <= tol.bound(1.0)
                && (self.offset - s * other.offset).abs() <= tol.bound(scale)
        };
        check(1.0) || check(-1.0)
    }
}

/// Circle through three non-collinear points.
pub fn circumcircle(p1: Point, p2: Point, p3: Point, tol: Tolerance) -> Result<Circle> {
    let scale = p1.dist(p2).max(p2.dist(p3)).max(p1.dist(p3));
    let b = p2 - p1;
    let c = p3 - p1;
    let cross = b.cross(c);
    if cross.abs() <= tol.bound(scale * scale) {
        return Err(Error::CollinearInput);
    }
    let (b2, c2) = (b.norm2(), c.norm2());
    let inv = 0.5 / cross;
    let u = Point::new((c.y * b2 - b.y * c2) * inv, (b.x * c2 - c.x * b2) * inv);
    let center = p1 + u;
    let radius = (center.dist(p1) + center.dist(p2) + center.dist(p3)) / 3.0;
    Circle::try_new(center, radius)
}

/// Common points of two circles: none, one (tangency), or two ordered by
/// ascending y then x.
pub fn circle_intersection(c1: &Circle, c2: &Circle, tol: Tolerance) -> Result<Vec<Point>> {
    let delta = c2.center - c1.center;
    let d = delta.norm();
    let (r1, r2) = (c1.radius, c2.radius);
    let scale = d.max(r1).max(r2);
    if d <= tol.bound(scale) {
        if tol.approx_eq(r1, r2, scale) {
            return Err(Error::IdenticalCircles);
        }
        return Ok(Vec::new());
    }
    let u = delta * (1.0 / d);
    let a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    let h2 = (r1 - a) * (r1 + a);
    let band = tol.bound(scale * scale);
    if h2 < -band {
        return Ok(Vec::new());
    }
    let foot = c1.center + u * a;
    if h2 <= band {
        return Ok(vec![foot]);
    }
    let off = u.perp() * h2.sqrt();
    let mut pts = vec![foot + off, foot - off];
    pts.sort_by(Point::cmp_yx);
    Ok(pts)
}

/// Canonical line through two distinct points.
///
/// Symmetric in its arguments bit for bit: the normal only changes sign when
/// the points are swapped, and the offset is taken at the midpoint.
pub fn line_through(p: Point, q: Point, tol: Tolerance) -> Result<Line> {
    let scale = p.norm().max(q.norm());
    let dir = q - p;
    let len = dir.norm();
    if len <= tol.bound(scale) {
        return Err(Error::CoincidentPoints);
    }
    let n = dir.perp() * (1.0 / len);
    let mid = Point::new(0.5 * (p.x + q.x), 0.5 * (p.y + q.y));
    Ok(Line::canonical(n.x, n.y, n.dot(mid)))
}

pub fn point_line_distance(l: &Line, p: Point) -> f64 {
    l.signed_distance(p).abs()
}

/// Cross-product collinearity test scaled by the largest pairwise distance.
pub fn collinear(p1: Point, p2: Point, p3: Point, tol: Tolerance) -> bool {
    let scale = p1.dist(p2).max(p2.dist(p3)).max(p1.dist(p3));
    (p2 - p1).cross(p3 - p1).abs() <= tol.bound(scale * scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: Tolerance = Tolerance::DEFAULT;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12 * (1.0 + a.abs().max(b.abs()))
    }

    #[test]
    fn circumcircle_right_triangle() {
        let c = circumcircle(p(0.0, 0.0), p(4.0, 0.0), p(0.0, 3.0), TOL).unwrap();
        assert!(close(c.center.x, 2.0) && close(c.center.y, 1.5));
        assert!(close(c.radius, 2.5));
    }

    #[test]
    fn circumcircle_symmetric() {
        let c = circumcircle(p(1.0, 0.0), p(0.0, 1.0), p(-1.0, 0.0), TOL).unwrap();
        assert!(c.center.norm() < 1e-15);
        assert!(close(c.radius, 1.0));
    }

    #[test]
    fn circumcircle_collinear_rejected() {
        assert_eq!(
            circumcircle(p(0.0, 0.0), p(1.0, 1.0), p(2.0, 2.0), TOL),
            Err(Error::CollinearInput)
        );
        assert_eq!(
            circumcircle(p(1.0, 1.0), p(1.0, 1.0), p(2.0, 0.0), TOL),
            Err(Error::CollinearInput)
        );
    }

    #[test]
    fn intersection_two_points_ordered() {
        let a = Circle::new(p(0.0, 0.0), 1.0);
        let b = Circle::new(p(1.0, 0.0), 1.0);
        let pts = circle_intersection(&a, &b, TOL).unwrap();
        let h = 3f64.sqrt() / 2.0;
        assert_eq!(pts.len(), 2);
        assert!(close(pts[0].x, 0.5) && close(pts[0].y, -h));
        assert!(close(pts[1].x, 0.5) && close(pts[1].y, h));
    }

    #[test]
    fn intersection_tangent_and_disjoint() {
        let a = Circle::new(p(0.0, 0.0), 1.0);
        let pts = circle_intersection(&a, &Circle::new(p(2.0, 0.0), 1.0), TOL).unwrap();
        assert_eq!(pts, vec![p(1.0, 0.0)]);
        let none = circle_intersection(&a, &Circle::new(p(5.0, 0.0), 1.0), TOL).unwrap();
        assert!(none.is_empty());
        // internal tangency
        let inner = Circle::new(p(1.0, 0.0), 1.0);
        let pts = circle_intersection(&Circle::new(p(0.0, 0.0), 2.0), &inner, TOL).unwrap();
        assert_eq!(pts.len(), 1);
        assert!(close(pts[0].x, 2.0));
    }

    #[test]
    fn intersection_identical_and_concentric() {
        let a = Circle::new(p(1.0, 2.0), 3.0);
        assert_eq!(
            circle_intersection(&a, &a, TOL),
            Err(Error::IdenticalCircles)
        );
        let b = Circle::new(p(1.0, 2.0), 1.0);
        assert!(circle_intersection(&a, &b, TOL).unwrap().is_empty());
    }

    #[test]
    fn line_through_examples() {
        let l = line_through(p(0.0, 0.0), p(0.0, 5.0), TOL).unwrap();
        assert_eq!((l.normal(), l.offset()), (p(1.0, 0.0), 0.0));
        let l = line_through(p(0.0, 0.0), p(1.0, 1.0), TOL).unwrap();
        let s = 1.0 / 2f64.sqrt();
        assert!(close(l.normal().x, s) && close(l.normal().y, -s));
        assert_eq!(l.offset(), 0.0);
        let l = line_through(p(2.0, 0.0), p(2.0, 9.0), TOL).unwrap();
        assert_eq!((l.normal(), l.offset()), (p(1.0, 0.0), 2.0));
        assert_eq!(
            line_through(p(1.0, 1.0), p(1.0, 1.0), TOL),
            Err(Error::CoincidentPoints)
        );
    }

    #[test]
    fn horizontal_line_normal_points_up() {
        let l = line_through(p(5.0, 3.0), p(-1.0, 3.0), TOL).unwrap();
        assert_eq!(l.normal(), p(0.0, 1.0));
        assert_eq!(l.offset(), 3.0);
    }

    #[test]
    fn distance_examples() {
        let x2 = line_through(p(2.0, 0.0), p(2.0, 9.0), TOL).unwrap();
        assert_eq!(point_line_distance(&x2, p(5.0, 7.0)), 3.0);
        assert_eq!(point_line_distance(&x2, p(2.0, -40.0)), 0.0);
        // by hand: normal (1,-1)/sqrt2, p = (0,2) projects to -2/sqrt2
        let diag = line_through(p(0.0, 0.0), p(1.0, 1.0), TOL).unwrap();
        assert!(close(point_line_distance(&diag, p(0.0, 2.0)), 2f64.sqrt()));
    }

    #[test]
    fn collinear_examples() {
        assert!(collinear(p(0.0, 0.0), p(1.0, 1.0), p(2.0, 2.0), TOL));
        assert!(!collinear(p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0), TOL));
        assert!(collinear(
            p(-2.25, 0.0),
            p(-36.0 / 7.0, 48.0 / 7.0),
            p(0.0, -16.0 / 3.0),
            TOL
        ));
    }

    #[test]
    fn line_coefficient_distance_handles_flip() {
        let a = Line::new(1e-17, 1.0, 2.0).unwrap();
        let b = Line::new(-1e-17, 1.0, 2.0).unwrap();
        assert!(a.coefficient_distance(&b) < 1e-15);
        assert!(a.approx_eq(&b, TOL, 2.0));
    }

    #[test]
    fn tolerance_and_circle_validation() {
        assert!(Tolerance::new(0.0, 1e-9).is_err());
        assert!(Circle::try_new(Point::ORIGIN, -1.0).is_err());
        assert!(Circle::try_new(p(f64::NAN, 0.0), 1.0).is_err());
        assert!(Circle::try_new(Point::ORIGIN, 0.0).is_ok());
    }
}
