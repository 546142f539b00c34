//! Three-circle results: when the centers of the generalized Apollonius
//! circles `K_i = K_{O_i}(G_{i+1}, G_{i+2})` are collinear, and the common
//! radical axis of those circles.
//!
//! Indices are 0-based and cyclic (`i + 3 == i`). With `P_j(O_i)` the power of
//! center `O_i` with respect to circle `G_j`, the centers `M_i` are collinear
//! exactly when the signed division ratios `P_{i+1}(O_i) / P_{i+2}(O_i)` have
//! product one (Menelaus), or equivalently when
//!
//! ```text
//!   sum_i D(i,i+1) D(i,i+2) (r_{i+1}^2 - r_{i+2}^2)
//!     = sum_i r_{i+1}^2 r_{i+2}^2 (D(i,i+1) - D(i,i+2))
//! ```
//!
//! with `D(i,j) = |O_i O_j|^2`. Both hold for equal radii and for equilateral
//! center triangles.

use crate::error::{Error, KDegeneracy, Result};
use crate::general::{generalized_locus, Locus, PowerRatio};
use crate::geom::{circumcircle, collinear, line_through, Circle, Line, Point, Tolerance};
use crate::power::{power, radical_axis};

#[inline]
fn next(i: usize) -> usize {
    (i + 1) % 3
}

#[inline]
fn prev(i: usize) -> usize {
    (i + 2) % 3
}

/// Three circles whose centers form a proper triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleTriple {
    circles: [Circle; 3],
    circumcenter: Point,
    circumradius: f64,
}

impl CircleTriple {
    pub fn new(circles: [Circle; 3], tol: Tolerance) -> Result<Self> {
        let [a, b, c] = circles.map(|g| g.center);
        let cc = circumcircle(a, b, c, tol).map_err(|_| Error::DegenerateTriangle)?;
        Ok(CircleTriple {
            circles,
            circumcenter: cc.center,
            circumradius: cc.radius,
        })
    }

    pub fn circles(&self) -> &[Circle; 3] {
        &self.circles
    }

    pub fn circle(&self, i: usize) -> &Circle {
        &self.circles[i % 3]
    }

    pub fn center(&self, i: usize) -> Point {
        self.circles[i % 3].center
    }

    pub fn radius(&self, i: usize) -> f64 {
        self.circles[i % 3].radius
    }

    /// Circumcenter `O` of the center triangle.
    pub fn circumcenter(&self) -> Point {
        self.circumcenter
    }

    pub fn circumradius(&self) -> f64 {
        self.circumradius
    }

    /// The triple relabeled so that circle `shift` comes first.
    pub fn rotated(&self, shift: usize) -> CircleTriple {
        let c = |i: usize| self.circles[(i + shift) % 3];
        CircleTriple {
            circles: [c(0), c(1), c(2)],
            ..*self
        }
    }

    /// Largest center distance or radius.
    pub fn scale(&self) -> f64 {
        (0..3).fold(0.0f64, |s, i| {
            s.max(self.center(i).dist(self.center(next(i))))
                .max(self.radius(i))
        })
    }

    /// `P_j(O_i)`.
    pub fn power_at(&self, i: usize, j: usize) -> f64 {
        power(self.circle(j), self.center(i))
    }

    /// `P_{i+1}(O_i) : P_{i+2}(O_i)`, the ratio defining `K_i`.
    pub fn ratio(&self, i: usize, tol: Tolerance) -> Result<PowerRatio> {
        let (a, b) = (self.power_at(i, next(i)), self.power_at(i, prev(i)));
        let s = self.scale();
        let band = tol.bound(s * s);
        let degenerate = |reason| Error::DegenerateK { index: i, reason };
        if a.abs() <= band || b.abs() <= band {
            return Err(degenerate(KDegeneracy::ZeroPower));
        }
        let k = PowerRatio::new(a, b)?;
        if k.is_unit(tol) {
            return Err(degenerate(KDegeneracy::EqualPowers));
        }
        Ok(k)
    }

    /// `K_i = K_{O_i}(G_{i+1}, G_{i+2})`.
    pub fn k_circle(&self, i: usize, tol: Tolerance) -> Result<Locus> {
        let k = self.ratio(i, tol)?;
        generalized_locus(self.circle(next(i)), self.circle(prev(i)), k, tol)
    }
}

/// Centers and circles of the three generalized Apollonius circles of a
/// triple, with the three forms of the collinearity test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TripleReport {
    /// `M_i`, lying on line `O_{i+1} O_{i+2}`.
    pub m: [Point; 3],
    pub k_circles: [Locus; 3],
    pub ratios: [PowerRatio; 3],
    pub menelaus: f64,
    pub balance_lhs: f64,
    pub balance_rhs: f64,
    pub collinear: bool,
}

pub fn generalized_centers(t: &CircleTriple, tol: Tolerance) -> Result<TripleReport> {
    let mut ratios = [PowerRatio::ONE; 3];
    let mut k_circles = [Locus::Empty; 3];
    let mut m = [Point::ORIGIN; 3];
    for i in 0..3 {
        ratios[i] = t.ratio(i, tol)?;
        k_circles[i] = t.k_circle(i, tol)?;
        m[i] = k_circles[i].center().ok_or(Error::DegenerateK {
            index: i,
            reason: KDegeneracy::NotRealCircle,
        })?;
    }
    let menelaus = menelaus_of(&ratios);
    let (balance_lhs, balance_rhs) = collinearity_balance(t);
    let collinear = decide_collinear(t, &m, menelaus, balance_lhs - balance_rhs, tol)?;
    Ok(TripleReport {
        m,
        k_circles,
        ratios,
        menelaus,
        balance_lhs,
        balance_rhs,
        collinear,
    })
}

fn menelaus_of(ratios: &[PowerRatio; 3]) -> f64 {
    ratios.iter().map(|k| k.num() / k.den()).product()
}

/// Requires the Menelaus test, the balance test and the geometric test on
/// the centers to agree.
fn decide_collinear(
    t: &CircleTriple,
    m: &[Point; 3],
    menelaus: f64,
    balance: f64,
    tol: Tolerance,
) -> Result<bool> {
    let by_menelaus = (menelaus - 1.0).abs() <= tol.bound(1.0);
    let s = t.scale();
    let by_balance = balance.abs() <= tol.bound(s.powi(6));
    let by_geometry = collinear(m[0], m[1], m[2], tol);
    if by_menelaus == by_balance && by_balance == by_geometry {
        Ok(by_menelaus)
    } else {
        Err(Error::InternalInconsistency(format!(
            "collinearity tests disagree: menelaus {menelaus} ({by_menelaus}), \
             balance residual {balance:e} ({by_balance}), geometric ({by_geometry})"
        )))
    }
}

/// `[P_2(O_1)/P_3(O_1)] [P_3(O_2)/P_1(O_2)] [P_1(O_3)/P_2(O_3)]`.
pub fn menelaus_product(t: &CircleTriple, tol: Tolerance) -> Result<f64> {
    let mut ratios = [PowerRatio::ONE; 3];
    for (i, r) in ratios.iter_mut().enumerate() {
        *r = t.ratio(i, tol)?;
    }
    Ok(menelaus_of(&ratios))
}

/// Both sides of the polynomial collinearity criterion, as written.
pub fn collinearity_balance(t: &CircleTriple) -> (f64, f64) {
    let d = |i: usize, j: usize| t.center(i).dist2(t.center(j));
    let r2 = |i: usize| t.radius(i) * t.radius(i);
    let mut lhs = 0.0;
    let mut rhs = 0.0;
    for i in 0..3 {
        let (j, k) = (next(i), prev(i));
        lhs += d(i, j) * d(i, k) * (r2(j) - r2(k));
        rhs += r2(j) * r2(k) * (d(i, j) - d(i, k));
    }
    (lhs, rhs)
}

/// Line through the three collinear centers `M_i`.
pub fn lemoine_line_generalized(t: &CircleTriple, tol: Tolerance) -> Result<Line> {
    let report = generalized_centers(t, tol)?;
    if !report.collinear {
        return Err(Error::NotCollinear {
            residual: report.balance_lhs - report.balance_rhs,
        });
    }
    let m = report.m;
    // widest pair defines the line
    let (i, j) = [(0, 1), (1, 2), (0, 2)]
        .into_iter()
        .max_by(|a, b| m[a.0].dist2(m[a.1]).total_cmp(&m[b.0].dist2(m[b.1])))
        .unwrap_or((0, 1));
    line_through(m[i], m[j], tol)
}

/// Radical axes `l_i` of `(K_{i+1}, K_{i+2})`, which coincide and pass through
/// the circumcenter `o` when the centers are collinear.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadicalAxes {
    pub lines: [Line; 3],
    pub o: Point,
}

impl RadicalAxes {
    /// Largest pairwise coefficient difference between the three lines.
    pub fn spread(&self) -> f64 {
        let l = &self.lines;
        l[0].coefficient_distance(&l[1])
            .max(l[1].coefficient_distance(&l[2]))
            .max(l[0].coefficient_distance(&l[2]))
    }
}

fn real_k_circles(report: &TripleReport) -> Result<[Circle; 3]> {
    let mut out = [Circle::point_circle(Point::ORIGIN); 3];
    for (i, k) in report.k_circles.iter().enumerate() {
        out[i] = *k.as_circle().ok_or(Error::DegenerateK {
            index: i,
            reason: KDegeneracy::NotRealCircle,
        })?;
    }
    Ok(out)
}

pub fn k_radical_axes(t: &CircleTriple, tol: Tolerance) -> Result<RadicalAxes> {
    let report = generalized_centers(t, tol)?;
    if !report.collinear {
        return Err(Error::NotCollinear {
            residual: report.balance_lhs - report.balance_rhs,
        });
    }
    let k = real_k_circles(&report)?;
    let mut lines = [Line::new(1.0, 0.0, 0.0)?; 3];
    for (i, l) in lines.iter_mut().enumerate() {
        *l = radical_axis(&k[next(i)], &k[prev(i)], tol)?;
    }
    Ok(RadicalAxes {
        lines,
        o: t.circumcenter(),
    })
}

/// Closed form of the power of the circumcenter with respect to `K_i`:
///
/// ```text
///   r^2 - (k r_{i+1}^2 - r_{i+2}^2) / (k - 1),   k = P_{i+2}(O_i) / P_{i+1}(O_i)
/// ```
///
/// where `r` is the circumradius of the center triangle.
pub fn circumcenter_power(t: &CircleTriple, i: usize, tol: Tolerance) -> Result<f64> {
    let i = i % 3;
    let k = t.k_circle(i, tol)?;
    if k.as_circle().is_none() {
        return Err(Error::DegenerateK {
            index: i,
            reason: KDegeneracy::NotRealCircle,
        });
    }
    let (j, l) = (next(i), prev(i));
    // k = a / b, kept as a pair
    let a = t.power_at(i, l);
    let b = t.power_at(i, j);
    let (rj2, rl2) = (t.radius(j).powi(2), t.radius(l).powi(2));
    let r2 = t.circumradius().powi(2);
    Ok(r2 - (a * rj2 - b * rl2) / (a - b))
}
