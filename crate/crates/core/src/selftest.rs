//! Seeded randomized invariant suites.
//!
//! Every suite draws its cases from its own ChaCha stream derived from the
//! seed, so the outcome is a pure function of the seed.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classic::{classic_apollonius, lemoine_data};
use crate::general::{generalized_locus, k_thresholds, KThresholds, Locus, PowerRatio};
use crate::geom::{point_line_distance, Circle, Point, Tolerance};
use crate::oracle::{verify_locus, ScanWindow};
use crate::power::power;
use crate::triple::{circumcenter_power, generalized_centers, k_radical_axes, CircleTriple};

/// Case generators shared by the suites and the acceptance tests.
pub mod gen {
    use super::*;

    pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        r.set_stream(stream);
        r
    }

    pub fn point(rng: &mut impl Rng, half: f64) -> Point {
        Point::new(rng.random_range(-half..half), rng.random_range(-half..half))
    }

    pub fn circle(rng: &mut impl Rng, half: f64, r_max: f64) -> Circle {
        Circle::new(point(rng, half), rng.random_range(0.0..r_max))
    }

    /// Finite ratio in `[-10, 10]`.
    pub fn ratio(rng: &mut impl Rng) -> PowerRatio {
        PowerRatio::finite(rng.random_range(-10.0..10.0)).expect("finite")
    }

    /// `(G1, G2, k, K)` with `K` a real circle.
    pub fn real_locus(rng: &mut impl Rng) -> (Circle, Circle, PowerRatio, Circle) {
        loop {
            let (c1, c2, k) = (circle(rng, 10.0, 5.0), circle(rng, 10.0, 5.0), ratio(rng));
            if let Ok(Locus::RealCircle(kc)) = generalized_locus(&c1, &c2, k, Tolerance::DEFAULT) {
                return (c1, c2, k, kc);
            }
        }
    }

    /// Like [`real_locus`], with the locus of radius at least 1 well inside
    /// the square `[-half, half]^2`.
    pub fn windowed_locus(rng: &mut impl Rng, half: f64) -> (Circle, Circle, PowerRatio, Circle) {
        loop {
            let (c1, c2, k) = (
                circle(rng, 0.5 * half, 0.25 * half),
                circle(rng, 0.5 * half, 0.25 * half),
                ratio(rng),
            );
            if let Ok(Locus::RealCircle(kc)) = generalized_locus(&c1, &c2, k, Tolerance::DEFAULT) {
                let reach = kc.center.x.abs().max(kc.center.y.abs()) + kc.radius;
                if kc.radius >= 1.0 && reach <= 0.9 * half {
                    return (c1, c2, k, kc);
                }
            }
        }
    }

    fn pair_scale(c1: &Circle, c2: &Circle) -> f64 {
        c1.center.dist(c2.center).max(c1.radius).max(c2.radius)
    }

    /// Non-concentric circles that do not cross, either apart or nested,
    /// with a clear margin from tangency.
    pub fn separated_pair(rng: &mut impl Rng) -> (Circle, Circle) {
        loop {
            let c1 = Circle::new(point(rng, 10.0), rng.random_range(0.1..5.0));
            let c2 = Circle::new(point(rng, 10.0), rng.random_range(0.1..5.0));
            let d = c1.center.dist(c2.center);
            let m = 0.1 * pair_scale(&c1, &c2);
            let apart = d > c1.radius + c2.radius + m;
            let nested = d + m < (c1.radius - c2.radius).abs() && d > m;
            if apart || nested {
                return (c1, c2);
            }
        }
    }

    /// Circles meeting in two points, with a clear margin from tangency.
    pub fn crossing_pair(rng: &mut impl Rng) -> (Circle, Circle) {
        loop {
            let c1 = Circle::new(point(rng, 5.0), rng.random_range(0.1..5.0));
            let c2 = Circle::new(point(rng, 5.0), rng.random_range(0.1..5.0));
            let d = c1.center.dist(c2.center);
            let m = 0.1 * pair_scale(&c1, &c2);
            if d > (c1.radius - c2.radius).abs() + m && d + m < c1.radius + c2.radius {
                return (c1, c2);
            }
        }
    }

    /// Triangle whose side lengths differ pairwise by at least 5% of the
    /// longest side and whose area is not small.
    pub fn scalene(rng: &mut impl Rng) -> [Point; 3] {
        loop {
            let t = [point(rng, 10.0), point(rng, 10.0), point(rng, 10.0)];
            let s = [t[1].dist(t[2]), t[2].dist(t[0]), t[0].dist(t[1])];
            let long = s[0].max(s[1]).max(s[2]);
            let distinct = (0..3).all(|i| (s[i] - s[(i + 1) % 3]).abs() >= 0.05 * long);
            let area = 0.5 * (t[1] - t[0]).cross(t[2] - t[0]).abs();
            if long > 0.5 && distinct && area >= 0.05 * long * long {
                return t;
            }
        }
    }

    /// Every `K_i` is a real circle and every ratio stays clear of 0 and 1.
    pub fn well_posed(t: &CircleTriple) -> bool {
        let tol = Tolerance::DEFAULT;
        let s2 = t.scale().powi(2);
        (0..3).all(|i| {
            let (a, b) = (t.power_at(i, (i + 1) % 3), t.power_at(i, (i + 2) % 3));
            a.abs() >= 1e-3 * s2
                && b.abs() >= 1e-3 * s2
                && (a - b).abs() >= 1e-2 * a.abs().max(b.abs())
                && matches!(t.k_circle(i, tol), Ok(Locus::RealCircle(_)))
        })
    }

    /// Scalene center triangle, one common radius.
    pub fn equal_radius_triple(rng: &mut impl Rng) -> CircleTriple {
        loop {
            let p = scalene(rng);
            let short = p[0].dist(p[1]).min(p[1].dist(p[2])).min(p[2].dist(p[0]));
            let r = rng.random_range(0.0..0.5 * short);
            let circles = p.map(|c| Circle::new(c, r));
            if let Ok(t) = CircleTriple::new(circles, Tolerance::DEFAULT) {
                if well_posed(&t) {
                    return t;
                }
            }
        }
    }

    /// Equilateral center triangle, independent radii.
    pub fn equilateral_triple(rng: &mut impl Rng) -> CircleTriple {
        loop {
            let c = point(rng, 10.0);
            let side = rng.random_range(1.0..10.0);
            let phase = rng.random_range(0.0..std::f64::consts::TAU);
            let rho = side / 3f64.sqrt();
            let circles = [0.0, 1.0, 2.0].map(|j: f64| {
                let a = phase + j * std::f64::consts::TAU / 3.0;
                Circle::new(
                    c + Point::new(a.cos(), a.sin()) * rho,
                    rng.random_range(0.0..0.8 * side),
                )
            });
            if let Ok(t) = CircleTriple::new(circles, Tolerance::DEFAULT) {
                if well_posed(&t) {
                    return t;
                }
            }
        }
    }

    /// Arbitrary centers and radii.
    pub fn generic_triple(rng: &mut impl Rng) -> CircleTriple {
        loop {
            let circles = [
                circle(rng, 10.0, 5.0),
                circle(rng, 10.0, 5.0),
                circle(rng, 10.0, 5.0),
            ];
            if let Ok(t) = CircleTriple::new(circles, Tolerance::DEFAULT) {
                if t.circumradius() <= 100.0 && well_posed(&t) {
                    return t;
                }
            }
        }
    }
}

/// Pass/fail counts of one suite.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
}

impl SuiteOutcome {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} passed, {} failed",
            self.name, self.passed, self.failed
        )?;
        if let Some(m) = &self.first_failure {
            write!(f, " (first: {m})")?;
        }
        Ok(())
    }
}

type Check = fn(&mut ChaCha8Rng) -> Result<(), String>;

fn run_suite(
    name: &'static str,
    seed: u64,
    stream: u64,
    cases: usize,
    check: Check,
) -> SuiteOutcome {
    let mut rng = gen::rng(seed, stream);
    let mut out = SuiteOutcome {
        name,
        passed: 0,
        failed: 0,
        first_failure: None,
    };
    for case in 0..cases {
        match check(&mut rng) {
            Ok(()) => out.passed += 1,
            Err(m) => {
                out.failed += 1;
                out.first_failure
                    .get_or_insert_with(|| format!("case {case}: {m}"));
            }
        }
    }
    out
}

const TOL: Tolerance = Tolerance::DEFAULT;

fn locus_residual(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (c1, c2, k, kc) = gen::real_locus(rng);
    for j in 0..16 {
        let x = kc.point_at(j as f64 * std::f64::consts::TAU / 16.0);
        let (p1, p2) = (power(&c1, x), power(&c2, x));
        let res = (k.den() * p1 - k.num() * p2).abs();
        if res > 1e-8 * p1.abs().max(p2.abs()).max(1.0) {
            return Err(format!("residual {res:e} at {x:?}"));
        }
    }
    Ok(())
}

fn swap_symmetry(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (c1, c2, k, _) = gen::real_locus(rng);
    let a = generalized_locus(&c1, &c2, k, TOL).map_err(|e| e.to_string())?;
    let b = generalized_locus(&c2, &c1, k.inverse(), TOL).map_err(|e| e.to_string())?;
    let s = a
        .as_circle()
        .map_or(1.0, |c| c.center.norm().max(c.radius).max(1.0));
    let loose = Tolerance::uniform(1e-9 * s).expect("valid");
    if a.approx_eq(&b, loose) {
        Ok(())
    } else {
        Err(format!("{a:?} vs {b:?}"))
    }
}

fn similarity(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (c1, c2, k, kc) = gen::real_locus(rng);
    let angle = rng.random_range(0.0..std::f64::consts::TAU);
    let scale = rng.random_range(0.1..10.0);
    let shift = gen::point(rng, 10.0);
    let (s, c) = angle.sin_cos();
    let map = |p: Point| Point::new(c * p.x - s * p.y, s * p.x + c * p.y) * scale + shift;
    let g = |x: &Circle| Circle::new(map(x.center), x.radius * scale);
    let moved = generalized_locus(&g(&c1), &g(&c2), k, TOL).map_err(|e| e.to_string())?;
    let want = g(&kc);
    let got = moved
        .as_circle()
        .ok_or_else(|| format!("kind changed to {}", moved.kind()))?;
    let m = want.center.norm().max(want.radius).max(1.0);
    if got.center.dist(want.center) <= 1e-8 * m && (got.radius - want.radius).abs() <= 1e-8 * m {
        Ok(())
    } else {
        Err(format!("{got:?} vs {want:?}"))
    }
}

fn threshold_roots(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (c1, c2) = gen::separated_pair(rng);
    let KThresholds::TwoRoots { k_minus, k_plus } = k_thresholds(&c1, &c2, TOL) else {
        return Err("expected two roots".into());
    };
    for k in [k_minus, k_plus] {
        let l = generalized_locus(&c1, &c2, PowerRatio::finite(k).expect("finite"), TOL);
        if !matches!(l, Ok(Locus::SinglePoint(_))) {
            return Err(format!("k={k} gives {l:?}"));
        }
    }
    let mid = PowerRatio::finite(0.5 * (k_minus + k_plus)).expect("finite");
    match generalized_locus(&c1, &c2, mid, TOL) {
        Ok(Locus::Empty) => Ok(()),
        other => Err(format!("between the roots: {other:?}")),
    }
}

fn classic_reduction(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let [a, b, c] = gen::scalene(rng);
    let classic = classic_apollonius(a, b, c, TOL).map_err(|e| e.to_string())?;
    let general = crate::general::apollonius_of_point(
        a,
        &Circle::point_circle(b),
        &Circle::point_circle(c),
        TOL,
    )
    .map_err(|e| e.to_string())?;
    let (x, y) = (classic.circle(), general.as_circle().copied());
    match (x, y) {
        (Some(x), Some(y)) => {
            let m = x.center.norm().max(x.radius);
            if x.center.dist(y.center) <= 1e-12 * m
                && (x.radius - y.radius).abs() <= 1e-12 * x.radius
            {
                Ok(())
            } else {
                Err(format!("{x:?} vs {y:?}"))
            }
        }
        _ => Err(format!("{x:?} vs {y:?}")),
    }
}

fn triangle_points(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let [a, b, c] = gen::scalene(rng);
    let d = lemoine_data(a, b, c, TOL).map_err(|e| e.to_string())?;
    let s = a
        .dist(b)
        .max(b.dist(c))
        .max(c.dist(a))
        .max(a.norm())
        .max(b.norm())
        .max(c.norm());
    for (k, name) in [(&d.k_a, "A"), (&d.k_b, "B"), (&d.k_c, "C")] {
        for (p, which) in [(d.s1, "S1"), (d.s2, "S2")] {
            let off = (p.dist(k.center) - k.radius).abs();
            if off > 1e-8 * s {
                return Err(format!("{which} off K_{name} by {off:e}"));
            }
        }
    }
    let off = point_line_distance(&d.lemoine, d.m_c);
    if off > 1e-8 * s.max(d.m_c.norm()) {
        return Err(format!("M_C off the line by {off:e}"));
    }
    Ok(())
}

fn collinear_families(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let family = rng.random_range(0..3u8);
    let t = match family {
        0 => gen::equal_radius_triple(rng),
        1 => gen::equilateral_triple(rng),
        _ => gen::generic_triple(rng),
    };
    let report = generalized_centers(&t, TOL).map_err(|e| e.to_string())?;
    if family < 2 && !report.collinear {
        return Err(format!("family {family} not collinear: {report:?}"));
    }
    Ok(())
}

fn concurrence(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let t = gen::equal_radius_triple(rng);
    let axes = k_radical_axes(&t, TOL).map_err(|e| e.to_string())?;
    let s = t.scale();
    if axes.spread() > 1e-8 {
        return Err(format!("axes spread {:e}", axes.spread()));
    }
    for (i, l) in axes.lines.iter().enumerate() {
        let off = point_line_distance(l, axes.o);
        if off > 1e-8 * s {
            return Err(format!("l_{i} misses O by {off:e}"));
        }
        let closed = circumcenter_power(&t, i, TOL).map_err(|e| e.to_string())?;
        let k = t.k_circle(i, TOL).map_err(|e| e.to_string())?;
        let direct = power(k.as_circle().expect("well posed"), axes.o);
        if (closed - direct).abs() > 1e-9 * s * s {
            return Err(format!("power {closed} vs {direct}"));
        }
    }
    Ok(())
}

fn oracle_agreement(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (c1, c2, k, kc) = gen::windowed_locus(rng, 10.0);
    let w = ScanWindow::centered(10.0, 0.1).map_err(|e| e.to_string())?;
    let r = verify_locus(&Locus::RealCircle(kc), &c1, &c2, k, &w);
    if r.agrees {
        Ok(())
    } else {
        Err(format!("{r:?}"))
    }
}

/// Runs every suite for `seed`, in a fixed order.
pub fn run_all(seed: u64) -> Vec<SuiteOutcome> {
    let suites: [(&'static str, usize, Check); 9] = [
        ("locus_residual", 200, locus_residual),
        ("swap_symmetry", 200, swap_symmetry),
        ("similarity", 200, similarity),
        ("threshold_roots", 100, threshold_roots),
        ("classic_reduction", 200, classic_reduction),
        ("triangle_points", 100, triangle_points),
        ("collinear_families", 300, collinear_families),
        ("concurrence", 100, concurrence),
        ("oracle_agreement", 5, oracle_agreement),
    ];
    suites
        .iter()
        .enumerate()
        .map(|(i, &(name, n, check))| run_suite(name, seed, i as u64, n, check))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_seeded() {
        let a = gen::real_locus(&mut gen::rng(7, 0));
        let b = gen::real_locus(&mut gen::rng(7, 0));
        let c = gen::real_locus(&mut gen::rng(7, 1));
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn all_suites_pass() {
        for s in run_all(0) {
            assert!(s.ok(), "{s}");
        }
    }
}
