//! Brute-force locus finder used to cross-check the closed forms.
//!
//! The scanner only evaluates the defining relation `den P1(X) - num P2(X)` on
//! a grid, finds sign changes along grid edges and refines them by bisection.
//! It never uses the closed-form center or radius.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::general::{Locus, LocusKind, PowerRatio};
use crate::geom::{Circle, Point};
use crate::power::power;

/// Largest number of cells allowed along either axis.
pub const MAX_CELLS: usize = 4096;

const BISECTION_STEPS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanWindow {
    x_min: f64,
    x_max: f64,
    y_min: f64,
    y_max: f64,
    step: f64,
}

impl ScanWindow {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64, step: f64) -> Result<Self> {
        let finite = [x_min, x_max, y_min, y_max, step]
            .iter()
            .all(|v| v.is_finite());
        if !finite || x_min >= x_max || y_min >= y_max || step <= 0.0 {
            return Err(Error::InvalidWindow);
        }
        let w = ScanWindow {
            x_min,
            x_max,
            y_min,
            y_max,
            step,
        };
        let (nx, ny) = w.raw_cells();
        if nx > MAX_CELLS as f64 || ny > MAX_CELLS as f64 {
            return Err(Error::WindowTooFine);
        }
        Ok(w)
    }

    /// Square window `[-half, half]^2`.
    pub fn centered(half: f64, step: f64) -> Result<Self> {
        Self::new(-half, half, -half, half, step)
    }

    fn raw_cells(&self) -> (f64, f64) {
        (
            ((self.x_max - self.x_min) / self.step).ceil(),
            ((self.y_max - self.y_min) / self.step).ceil(),
        )
    }

    /// Number of cells along x and y.
    pub fn cells(&self) -> (usize, usize) {
        let (nx, ny) = self.raw_cells();
        (nx as usize, ny as usize)
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn bounds(&self) -> (f64, f64, f64, f64) {
        (self.x_min, self.x_max, self.y_min, self.y_max)
    }

    fn node(&self, i: usize, j: usize) -> Point {
        Point::new(
            (self.x_min + i as f64 * self.step).min(self.x_max),
            (self.y_min + j as f64 * self.step).min(self.y_max),
        )
    }

    pub fn contains(&self, p: Point) -> bool {
        (self.x_min..=self.x_max).contains(&p.x) && (self.y_min..=self.y_max).contains(&p.y)
    }

    fn corners(&self) -> [Point; 4] {
        [
            Point::new(self.x_min, self.y_min),
            Point::new(self.x_max, self.y_min),
            Point::new(self.x_max, self.y_max),
            Point::new(self.x_min, self.y_max),
        ]
    }

    fn nearest(&self, p: Point) -> Point {
        Point::new(
            p.x.clamp(self.x_min, self.x_max),
            p.y.clamp(self.y_min, self.y_max),
        )
    }

    fn extent(&self) -> f64 {
        self.corners().iter().fold(0.0f64, |m, c| m.max(c.norm()))
    }
}

/// The scanned function, with the ratio normalized.
struct Relation<'a> {
    c1: &'a Circle,
    c2: &'a Circle,
    p: f64,
    q: f64,
}

impl Relation<'_> {
    fn eval(&self, x: Point) -> f64 {
        self.q * power(self.c1, x) - self.p * power(self.c2, x)
    }

    /// Refines a sign change on segment `[a, b]`.
    fn bisect(&self, mut a: Point, mut fa: f64, mut b: Point, stop: f64) -> Point {
        for _ in 0..BISECTION_STEPS {
            let mid = a.midpoint(b);
            if mid == a || mid == b {
                break;
            }
            let fm = self.eval(mid);
            if fm.abs() <= stop {
                return mid;
            }
            if (fm < 0.0) == (fa < 0.0) {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
        }
        a.midpoint(b)
    }
}

fn scan_scale(c1: &Circle, c2: &Circle, w: &ScanWindow) -> f64 {
    w.extent()
        .max(c1.center.norm() + c1.radius)
        .max(c2.center.norm() + c2.radius)
}

/// Points where `den P1 - num P2` changes sign between adjacent grid nodes,
/// refined by bisection, in row-major order. Nodes where the function is
/// exactly zero are reported as they are.
pub fn grid_scan(c1: &Circle, c2: &Circle, k: PowerRatio, w: &ScanWindow) -> Vec<Point> {
    let (p, q) = k.normalized();
    let f = Relation { c1, c2, p, q };
    let scale = scan_scale(c1, c2, w);
    let stop = 1e-12 * scale * scale;
    let (nx, ny) = w.cells();
    let row = |j: usize| -> Vec<f64> { (0..=nx).map(|i| f.eval(w.node(i, j))).collect() };

    let mut out = Vec::new();
    let mut cur = row(0);
    for j in 0..=ny {
        let above = (j < ny).then(|| row(j + 1));
        for i in 0..=nx {
            let (a, fa) = (w.node(i, j), cur[i]);
            if fa == 0.0 {
                out.push(a);
                continue;
            }
            if i < nx && fa * cur[i + 1] < 0.0 {
                out.push(f.bisect(a, fa, w.node(i + 1, j), stop));
            }
            if let Some(up) = &above {
                if fa * up[i] < 0.0 {
                    out.push(f.bisect(a, fa, w.node(i, j + 1), stop));
                }
            }
        }
        if let Some(up) = above {
            cur = up;
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitResult {
    pub circle: Circle,
    /// Root mean square of `x^2 + y^2 + Dx + Ey + F` over the input points.
    pub rms_residual: f64,
    pub n_points: usize,
}

/// Algebraic least-squares circle fit: minimizes the mean of
/// `(x^2 + y^2 + Dx + Ey + F)^2`.
pub fn fit_circle(points: &[Point]) -> Result<FitResult> {
    let n = points.len();
    if n < 3 {
        return Err(Error::TooFewPoints);
    }
    let inv_n = 1.0 / n as f64;
    let centroid = points.iter().fold(Point::ORIGIN, |s, &p| s + p) * inv_n;
    let spread = (points.iter().map(|p| p.dist2(centroid)).sum::<f64>() * inv_n).sqrt();
    if spread == 0.0 {
        return Err(Error::CollinearPoints);
    }
    // conditioned coordinates: centered and unit rms spread
    let local: Vec<Point> = points
        .iter()
        .map(|&p| (p - centroid) * (1.0 / spread))
        .collect();

    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for p in &local {
        sxx += p.x * p.x;
        sxy += p.x * p.y;
        syy += p.y * p.y;
    }
    let half_tr = 0.5 * (sxx + syy);
    let gap = (0.25 * (sxx - syy).powi(2) + sxy * sxy).sqrt();
    let (major, minor) = (half_tr + gap, half_tr - gap);
    if minor <= 1e-18 * major {
        return Err(Error::CollinearPoints);
    }

    let a = DMatrix::from_fn(n, 3, |i, j| match j {
        0 => local[i].x,
        1 => local[i].y,
        _ => 1.0,
    });
    let b = DVector::from_fn(n, |i, _| -local[i].norm2());
    let sol = a
        .svd(true, true)
        .solve(&b, 1e-14)
        .map_err(|_| Error::CollinearPoints)?;
    let (d, e, f) = (sol[0], sol[1], sol[2]);
    let r2 = 0.25 * (d * d + e * e) - f;
    if r2.is_nan() || r2 <= 0.0 {
        return Err(Error::CollinearPoints);
    }
    let residual2 = local
        .iter()
        .map(|p| (p.norm2() + d * p.x + e * p.y + f).powi(2))
        .sum::<f64>()
        * inv_n;
    let center = centroid + Point::new(-0.5 * d, -0.5 * e) * spread;
    Ok(FitResult {
        circle: Circle::try_new(center, r2.sqrt() * spread)?,
        rms_residual: residual2.sqrt() * spread * spread,
        n_points: n,
    })
}

/// Outcome of comparing a closed-form locus with the scanner.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub kind: LocusKind,
    /// Max `|den P1 - num P2|` over 64 samples of the analytic locus.
    pub max_residual: f64,
    /// Same, divided by `max(scale^2, |P1|, |P2|)` at each sample.
    pub max_relative_residual: f64,
    pub scan_hits: usize,
    /// Largest distance from a scan hit to the analytic locus.
    pub max_hit_distance: f64,
    pub fit: Option<FitResult>,
    pub center_error: Option<f64>,
    pub radius_error: Option<f64>,
    pub agrees: bool,
}

const SAMPLES: usize = 64;

fn locus_samples(analytic: &Locus, w: &ScanWindow) -> Vec<Point> {
    match analytic {
        Locus::RealCircle(c) => (0..SAMPLES)
            .map(|i| c.point_at(std::f64::consts::TAU * i as f64 / SAMPLES as f64))
            .collect(),
        Locus::Line(l) => {
            let (x0, x1, y0, y1) = w.bounds();
            let mid = l.project(Point::new(0.5 * (x0 + x1), 0.5 * (y0 + y1)));
            let half = 0.5 * (x1 - x0).hypot(y1 - y0);
            (0..SAMPLES)
                .map(|i| {
                    let t = -half + 2.0 * half * i as f64 / (SAMPLES - 1) as f64;
                    mid + l.direction() * t
                })
                .collect()
        }
        Locus::SinglePoint(p) => vec![*p],
        Locus::Empty => Vec::new(),
        Locus::WholePlane => {
            let (x0, x1, y0, y1) = w.bounds();
            (0..SAMPLES)
                .map(|i| {
                    let (a, b) = ((i % 8) as f64 / 7.0, (i / 8) as f64 / 7.0);
                    Point::new(x0 + a * (x1 - x0), y0 + b * (y1 - y0))
                })
                .collect()
        }
    }
}

/// Whether the locus passes through the closed window.
fn crosses_window(analytic: &Locus, w: &ScanWindow) -> bool {
    match analytic {
        Locus::RealCircle(c) => {
            let near = w.nearest(c.center).dist(c.center);
            let far = w
                .corners()
                .iter()
                .fold(0.0f64, |m, q| m.max(q.dist(c.center)));
            near <= c.radius && c.radius <= far
        }
        Locus::Line(l) => {
            let s: Vec<f64> = w.corners().iter().map(|&q| l.signed_distance(q)).collect();
            let lo = s.iter().cloned().fold(f64::INFINITY, f64::min);
            let hi = s.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            lo <= 0.0 && hi >= 0.0
        }
        Locus::SinglePoint(p) => w.contains(*p),
        Locus::Empty => false,
        Locus::WholePlane => true,
    }
}

/// Samples the analytic locus against the defining relation, then scans the
/// window and checks that the hits agree with the analytic shape.
pub fn verify_locus(
    analytic: &Locus,
    c1: &Circle,
    c2: &Circle,
    k: PowerRatio,
    w: &ScanWindow,
) -> VerifyReport {
    let (p, q) = k.normalized();
    let scale = c1.center.dist(c2.center).max(c1.radius).max(c2.radius);
    let mut max_residual = 0.0f64;
    let mut max_relative_residual = 0.0f64;
    for x in locus_samples(analytic, w) {
        let (p1, p2) = (power(c1, x), power(c2, x));
        let r = (q * p1 - p * p2).abs();
        max_residual = max_residual.max(r);
        max_relative_residual =
            max_relative_residual.max(r / (scale * scale).max(p1.abs()).max(p2.abs()));
    }

    let hits = grid_scan(c1, c2, k, w);
    let step = w.step();
    let max_hit_distance = hits
        .iter()
        .map(|&h| analytic.distance_to(h))
        .fold(0.0f64, f64::max);
    let fit = match analytic {
        Locus::RealCircle(_) => fit_circle(&hits).ok(),
        _ => None,
    };
    let (center_error, radius_error) = match (analytic, &fit) {
        (Locus::RealCircle(c), Some(fr)) => (
            Some(fr.circle.center.dist(c.center)),
            Some((fr.circle.radius - c.radius).abs()),
        ),
        _ => (None, None),
    };

    let crosses = crosses_window(analytic, w);
    let agrees = match analytic.kind() {
        LocusKind::RealCircle => {
            let fit_ok = center_error.is_none_or(|e| e <= 2.0 * step)
                && radius_error.is_none_or(|e| e <= 2.0 * step);
            (hits.is_empty() != crosses) && max_hit_distance <= step && fit_ok
        }
        LocusKind::Line => (hits.is_empty() != crosses) && max_hit_distance <= step,
        LocusKind::SinglePoint => max_hit_distance <= step * std::f64::consts::SQRT_2,
        LocusKind::Empty => hits.is_empty(),
        LocusKind::WholePlane => max_relative_residual <= 1e-9,
    };

    VerifyReport {
        kind: analytic.kind(),
        max_residual,
        max_relative_residual,
        scan_hits: hits.len(),
        max_hit_distance,
        fit,
        center_error,
        radius_error,
        agrees,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::general::generalized_locus;
    use crate::geom::Tolerance;

    fn circle(x: f64, y: f64, r: f64) -> Circle {
        Circle::new(Point::new(x, y), r)
    }

    fn k(v: f64) -> PowerRatio {
        PowerRatio::finite(v).unwrap()
    }

    #[test]
    fn window_validation() {
        assert_eq!(
            ScanWindow::new(1.0, 0.0, 0.0, 1.0, 0.1),
            Err(Error::InvalidWindow)
        );
        assert_eq!(
            ScanWindow::new(0.0, 1.0, 0.0, 1.0, 0.0),
            Err(Error::InvalidWindow)
        );
        assert_eq!(
            ScanWindow::new(0.0, 1.0, 0.0, 1.0, 1e-4),
            Err(Error::WindowTooFine)
        );
        assert!(ScanWindow::new(0.0, 4096.0, 0.0, 1.0, 1.0).is_ok());
        assert_eq!(ScanWindow::centered(12.0, 0.1).unwrap().cells(), (240, 240));
    }

    #[test]
    fn scan_finds_k2_circle() {
        let (c1, c2) = (circle(0.0, 0.0, 1.0), circle(3.0, 0.0, 1.0));
        let w = ScanWindow::centered(12.0, 0.1).unwrap();
        let hits = grid_scan(&c1, &c2, k(2.0), &w);
        assert!(hits.len() >= 100, "{}", hits.len());
        let r = 19f64.sqrt();
        for h in &hits {
            assert!((h.dist(Point::new(6.0, 0.0)) - r).abs() <= 1e-6);
        }
        let fit = fit_circle(&hits).unwrap();
        assert!(fit.circle.center.dist(Point::new(6.0, 0.0)) <= 1e-4);
        assert!((fit.circle.radius - r).abs() <= 1e-4);
    }

    #[test]
    fn scan_finds_radical_axis() {
        let (c1, c2) = (circle(0.0, 0.0, 1.0), circle(4.0, 0.0, 1.0));
        let w = ScanWindow::new(0.0, 4.0, -2.0, 2.0, 0.1).unwrap();
        let hits = grid_scan(&c1, &c2, PowerRatio::ONE, &w);
        assert!(!hits.is_empty());
        assert!(hits.iter().all(|h| (h.x - 2.0).abs() <= 1e-6));
    }

    #[test]
    fn scan_empty_locus() {
        let (c1, c2) = (circle(0.0, 0.0, 1.0), circle(4.0, 0.0, 1.0));
        let w = ScanWindow::centered(10.0, 0.1).unwrap();
        assert!(grid_scan(&c1, &c2, k(-1.0), &w).is_empty());
    }

    #[test]
    fn scan_is_row_major() {
        let (c1, c2) = (circle(0.0, 0.0, 1.0), circle(3.0, 0.0, 1.0));
        let w = ScanWindow::centered(12.0, 0.5).unwrap();
        let hits = grid_scan(&c1, &c2, k(2.0), &w);
        // hits are grouped by grid row: the row index never decreases
        let rows: Vec<i64> = hits
            .iter()
            .map(|h| ((h.y + 12.0) / 0.5).floor() as i64)
            .collect();
        assert!(rows.windows(2).all(|p| p[0] <= p[1]));
        assert_eq!(hits, grid_scan(&c1, &c2, k(2.0), &w));
    }

    #[test]
    fn fit_exact_samples() {
        let pts = [
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
            Point::new(-1.0, 0.0),
        ];
        let fit = fit_circle(&pts).unwrap();
        assert!(fit.circle.center.norm() < 1e-12);
        assert!((fit.circle.radius - 1.0).abs() < 1e-12);
        assert!(fit.rms_residual < 1e-12);

        let c = circle(6.0, 0.0, 19f64.sqrt());
        let pts: Vec<Point> = (0..64)
            .map(|i| c.point_at(i as f64 * 0.0981747704))
            .collect();
        let fit = fit_circle(&pts).unwrap();
        assert!(fit.circle.center.dist(c.center) < 1e-9);
        assert!((fit.circle.radius - c.radius).abs() < 1e-9);
        assert_eq!(fit.n_points, 64);
    }

    #[test]
    fn fit_errors() {
        assert_eq!(
            fit_circle(&[Point::ORIGIN, Point::new(1.0, 0.0)]),
            Err(Error::TooFewPoints)
        );
        let line: Vec<Point> = (0..10)
            .map(|i| Point::new(i as f64, 2.0 * i as f64))
            .collect();
        assert_eq!(fit_circle(&line), Err(Error::CollinearPoints));
    }

    #[test]
    fn verify_examples() {
        let tol = Tolerance::DEFAULT;
        let (c1, c2) = (circle(0.0, 0.0, 1.0), circle(3.0, 0.0, 1.0));
        let w = ScanWindow::centered(12.0, 0.1).unwrap();
        let l = generalized_locus(&c1, &c2, k(2.0), tol).unwrap();
        let r = verify_locus(&l, &c1, &c2, k(2.0), &w);
        assert!(r.agrees, "{r:?}");
        assert!(r.max_residual <= 1e-8);

        // tangency point sits on a grid node: (1, 0) = -2 + 6 * 0.5
        let (t1, t2) = (circle(0.0, 0.0, 1.0), circle(2.0, 0.0, 1.0));
        let w = ScanWindow::new(-2.0, 4.0, -2.0, 2.0, 0.5).unwrap();
        let l = generalized_locus(&t1, &t2, k(-1.0), tol).unwrap();
        assert_eq!(l, Locus::SinglePoint(Point::new(1.0, 0.0)));
        let r = verify_locus(&l, &t1, &t2, k(-1.0), &w);
        assert!(r.agrees && r.scan_hits >= 1, "{r:?}");

        let (e1, e2) = (circle(0.0, 0.0, 1.0), circle(4.0, 0.0, 1.0));
        let l = generalized_locus(&e1, &e2, k(-1.0), tol).unwrap();
        let r = verify_locus(&l, &e1, &e2, k(-1.0), &w);
        assert!(r.agrees && r.scan_hits == 0);
    }

    #[test]
    fn verify_flags_wrong_locus() {
        let (c1, c2) = (circle(0.0, 0.0, 1.0), circle(3.0, 0.0, 1.0));
        let w = ScanWindow::centered(12.0, 0.1).unwrap();
        let wrong = Locus::RealCircle(circle(5.0, 0.0, 4.0));
        assert!(!verify_locus(&wrong, &c1, &c2, k(2.0), &w).agrees);
        assert!(!verify_locus(&Locus::Empty, &c1, &c2, k(2.0), &w).agrees);
    }
}
