//! Power of a point with respect to a circle, and the radical axis of two
//! circles.

use crate::error::{Error, Result};
use crate::geom::{Circle, Line, Point, Tolerance};

/// `|OA|^2 - r^2`: negative inside the circle, zero on it, positive outside.
#[inline]
pub fn power(g: &Circle, a: Point) -> f64 {
    a.dist2(g.center) - g.radius * g.radius
}

/// Locus of equal power to two non-concentric circles.
///
/// The line is perpendicular to `O1O2` and crosses it at signed distance
/// `(d^2 + r1^2 - r2^2) / (2d)` from `O1`.
pub fn radical_axis(c1: &Circle, c2: &Circle, tol: Tolerance) -> Result<Line> {
    let delta = c2.center - c1.center;
    let d = delta.norm();
    let scale = d.max(c1.radius).max(c2.radius);
    if d <= tol.bound(scale) {
        return Err(Error::ConcentricCircles);
    }
    let u = delta * (1.0 / d);
    let a = (d * d + (c1.radius - c2.radius) * (c1.radius + c2.radius)) / (2.0 * d);
    Line::new(u.x, u.y, u.dot(c1.center) + a)
}
