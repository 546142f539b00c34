//! Classical Apollonius circles of points and triangles.
//!
//! `K_A(B, C)` is the circle of points `X` with `|XB| / |XC| = |AB| / |AC|`.
//! Its center is computed as the midpoint of the two division points of `BC`
//! in that ratio (the feet of the angle bisectors at `A`), which are
//! diametrically opposite on the circle.

use crate::error::{Error, Result};
use crate::general::Locus;
use crate::geom::{
    circle_intersection, circumcircle, collinear, line_through, Circle, Line, Point, Tolerance,
};

/// `K_A(B, C)` together with its center `M_A(B, C)` and radius `r_A(B, C)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicApollonius {
    /// A real circle, or the perpendicular bisector of `BC` when `|AB| = |AC|`.
    pub locus: Locus,
}

impl ClassicApollonius {
    pub fn center(&self) -> Option<Point> {
        self.locus.center()
    }

    pub fn radius(&self) -> Option<f64> {
        self.locus.as_circle().map(|c| c.radius)
    }

    pub fn circle(&self) -> Option<Circle> {
        self.locus.as_circle().copied()
    }
}

/// Centers of the three classic Apollonius circles of a scalene triangle,
/// their two common (isodynamic) points and the circumcenter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LemoineData {
    pub m_a: Point,
    pub m_b: Point,
    pub m_c: Point,
    /// Ordered by ascending y, then x.
    pub s1: Point,
    pub s2: Point,
    pub o: Point,
    pub lemoine: Line,
    pub k_a: Circle,
    pub k_b: Circle,
    pub k_c: Circle,
}

/// Internal and external points dividing `bc` in the ratio `wb : wc`, with
/// `diff = wc - wb` supplied by the caller so it can be formed without
/// cancellation.
fn division_points(b: Point, c: Point, wb: f64, wc: f64, diff: f64) -> (Point, Point) {
    let internal = (b * wc + c * wb) * (1.0 / (wb + wc));
    let external = (b * wc - c * wb) * (1.0 / diff);
    (internal, external)
}

fn circle_on_diameter(p: Point, q: Point) -> Result<Locus> {
    let r = 0.5 * p.dist(q);
    Ok(Locus::RealCircle(Circle::try_new(p.midpoint(q), r)?))
}

fn perpendicular_bisector(b: Point, c: Point) -> Result<Line> {
    Line::through_point(b.midpoint(c), c - b)
}

/// Locus of `X` with `|Xb| = lambda |Xc|`.
pub fn classic_ratio_locus(b: Point, c: Point, lambda: f64, tol: Tolerance) -> Result<Locus> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(Error::NonpositiveRatio);
    }
    if b.dist(c) <= tol.bound(b.norm().max(c.norm())) {
        return Err(Error::CoincidentPoints);
    }
    if (lambda - 1.0).abs() <= tol.bound(1.0) {
        return perpendicular_bisector(b, c).map(Locus::Line);
    }
    let (internal, external) = division_points(b, c, lambda, 1.0, 1.0 - lambda);
    circle_on_diameter(internal, external)
}

/// Side lengths `|ab|`, `|ac|` and `|ac| - |ab|` formed from squared distances.
fn ratio_weights(a: Point, b: Point, c: Point) -> (f64, f64, f64) {
    let (ab2, ac2) = (a.dist2(b), a.dist2(c));
    let (ab, ac) = (ab2.sqrt(), ac2.sqrt());
    (ab, ac, (ac2 - ab2) / (ab + ac))
}

fn distinct(a: Point, b: Point, c: Point, tol: Tolerance) -> Result<f64> {
    let scale = a.dist(b).max(b.dist(c)).max(a.dist(c));
    let tiny = tol.bound(a.norm().max(b.norm()).max(c.norm()));
    if a.dist(b) <= tiny || a.dist(c) <= tiny || b.dist(c) <= tiny {
        return Err(Error::CoincidentPoints);
    }
    Ok(scale)
}

/// `K_A(B, C)`.
pub fn classic_apollonius(
    a: Point,
    b: Point,
    c: Point,
    tol: Tolerance,
) -> Result<ClassicApollonius> {
    let scale = distinct(a, b, c, tol)?;
    let (ab, ac, diff) = ratio_weights(a, b, c);
    let locus = if diff.abs() <= tol.bound(scale) {
        Locus::Line(perpendicular_bisector(b, c)?)
    } else {
        let (internal, external) = division_points(b, c, ab, ac, diff);
        circle_on_diameter(internal, external)?
    };
    Ok(ClassicApollonius { locus })
}

/// Where the internal and external bisectors of the angle at `a` meet line
/// `bc`, returned as `(internal, external)`.
pub fn bisector_feet(a: Point, b: Point, c: Point, tol: Tolerance) -> Result<(Point, Point)> {
    let scale = distinct(a, b, c, tol)?;
    if collinear(a, b, c, tol) {
        return Err(Error::CollinearAbc);
    }
    let (ab, ac, diff) = ratio_weights(a, b, c);
    if diff.abs() <= tol.bound(scale) {
        return Err(Error::IsoscelesDegenerate);
    }
    Ok(division_points(b, c, ab, ac, diff))
}

pub fn lemoine_data(a: Point, b: Point, c: Point, tol: Tolerance) -> Result<LemoineData> {
    let scale = match distinct(a, b, c, tol) {
        Ok(s) => s,
        Err(_) => return Err(Error::DegenerateTriangle),
    };
    let o = match circumcircle(a, b, c, tol) {
        Ok(cc) => cc.center,
        Err(_) => return Err(Error::DegenerateTriangle),
    };
    let (ab, bc, ca) = (a.dist(b), b.dist(c), c.dist(a));
    let band = tol.bound(scale);
    if (ab - bc).abs() <= band || (bc - ca).abs() <= band || (ca - ab).abs() <= band {
        return Err(Error::NotScalene);
    }
    let circle = |p, q, r| -> Result<Circle> {
        classic_apollonius(p, q, r, tol)?
            .circle()
            .ok_or(Error::NotScalene)
    };
    let k_a = circle(a, b, c)?;
    let k_b = circle(b, c, a)?;
    let k_c = circle(c, a, b)?;
    let s = circle_intersection(&k_a, &k_b, tol)?;
    let [s1, s2] = s[..] else {
        return Err(Error::NumericalDegeneracy(
            "Apollonius circles of a scalene triangle failed to meet in two points",
        ));
    };
    let lemoine = line_through(k_a.center, k_b.center, tol)?;
    Ok(LemoineData {
        m_a: k_a.center,
        m_b: k_b.center,
        m_c: k_c.center,
        s1,
        s2,
        o,
        lemoine,
        k_a,
        k_b,
        k_c,
    })
}
