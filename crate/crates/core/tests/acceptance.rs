//! Acceptance suite: eight seeded criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the summary is always printed.

use std::fs;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use apollonius::oracle::{fit_circle, grid_scan, ScanWindow};
use apollonius::scene::{emit_report, emit_svg, parse_scene, run_scene};
use apollonius::selftest::gen;
use apollonius::*;
use rand::Rng;

const TOL: Tolerance = Tolerance::DEFAULT;
const SEED: u64 = 0x5eed;

struct Verdict {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Verdict {
    fn new() -> Self {
        Verdict {
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn within(&mut self, elapsed: Duration, limit: Duration) {
        self.note(format!("{:.3}s", elapsed.as_secs_f64()));
        self.check(elapsed < limit, || {
            format!("took {elapsed:?}, limit {limit:?}")
        });
    }
}

fn kth(c: &Locus) -> Circle {
    *c.as_circle().expect("real circle")
}

fn locus_residual() -> Verdict {
    let mut v = Verdict::new();
    let mut rng = gen::rng(SEED, 1);
    let start = Instant::now();
    let mut worst = 0.0f64;
    for case in 0..1000 {
        let (c1, c2, k, kc) = gen::real_locus(&mut rng);
        for j in 0..64 {
            let x = kc.point_at(std::f64::consts::TAU * j as f64 / 64.0);
            let (p1, p2) = (power(&c1, x), power(&c2, x));
            let rel = (k.den() * p1 - k.num() * p2).abs() / p1.abs().max(p2.abs()).max(1.0);
            worst = worst.max(rel);
            v.check(rel <= 1e-8, || {
                format!("case {case} sample {j}: relative residual {rel:e}")
            });
        }
    }
    v.within(start.elapsed(), Duration::from_secs(2));
    v.note(format!("worst {worst:.1e}"));
    v
}

fn oracle_equivalence() -> Verdict {
    let mut v = Verdict::new();
    let mut rng = gen::rng(SEED, 2);
    let w = ScanWindow::new(-20.0, 20.0, -20.0, 20.0, 0.05).unwrap();
    let start = Instant::now();
    let (mut dc, mut dr) = (0.0f64, 0.0f64);
    for case in 0..100 {
        let (c1, c2, k, kc) = gen::windowed_locus(&mut rng, 20.0);
        let hits = grid_scan(&c1, &c2, k, &w);
        match fit_circle(&hits) {
            Ok(fit) => {
                let (ec, er) = (
                    fit.circle.center.dist(kc.center),
                    (fit.circle.radius - kc.radius).abs(),
                );
                dc = dc.max(ec);
                dr = dr.max(er);
                v.check(ec <= 0.1 && er <= 0.1, || {
                    format!("case {case}: center off {ec:e}, radius off {er:e}")
                });
            }
            Err(e) => v.check(false, || format!("case {case}: fit failed: {e}")),
        }
    }
    v.within(start.elapsed(), Duration::from_secs(30));
    v.note(format!(
        "max center error {dc:.1e}, max radius error {dr:.1e}"
    ));
    v
}

/// Squared radius of the locus for finite `k != 1`, straight from the
/// expansion of `P1 = k P2`.
fn squared_radius(c1: &Circle, c2: &Circle, k: f64) -> f64 {
    let d2 = c1.center.dist2(c2.center);
    (k * c2.radius.powi(2) - c1.radius.powi(2)) / (k - 1.0) + k * d2 / (k - 1.0).powi(2)
}

fn thresholds() -> Verdict {
    let mut v = Verdict::new();
    let mut rng = gen::rng(SEED, 3);
    for case in 0..200 {
        let (c1, c2) = gen::separated_pair(&mut rng);
        let d = c1.center.dist(c2.center);
        let scale = d.max(c1.radius).max(c2.radius);
        let (r1s, r2s) = (c1.radius.powi(2), c2.radius.powi(2));
        let KThresholds::TwoRoots { k_minus, k_plus } = k_thresholds(&c1, &c2, TOL) else {
            v.check(false, || format!("separated case {case}: no two roots"));
            continue;
        };
        for k in [k_minus, k_plus] {
            let r2 = squared_radius(&c1, &c2, k);
            v.check(r2.abs() <= 1e-9 * scale * scale, || {
                format!("separated case {case}: radius^2 {r2:e} at root {k}")
            });
        }
        let prod = k_minus * k_plus;
        let want_prod = r1s / r2s;
        v.check((prod - want_prod).abs() <= 1e-9 * want_prod, || {
            format!("case {case}: product {prod} vs {want_prod}")
        });
        let sum = k_minus + k_plus;
        let want_sum = (r1s + r2s - d * d) / r2s;
        let mag = (r1s + r2s + d * d) / r2s;
        v.check((sum - want_sum).abs() <= 1e-9 * mag, || {
            format!("case {case}: sum {sum} vs {want_sum}")
        });

        let gap = k_plus - k_minus;
        for t in [0.1, 0.25, 0.5, 0.75, 0.9] {
            let k = PowerRatio::finite(k_minus + t * gap).unwrap();
            let kind = classify(&c1, &c2, k, TOL);
            v.check(kind == Ok(LocusKind::Empty), || {
                format!("case {case}: {kind:?} between the roots")
            });
        }
        for s in [0.05, 0.5, 3.0] {
            for k in [k_minus - s * gap, k_plus + s * gap] {
                let kind = classify(&c1, &c2, PowerRatio::finite(k).unwrap(), TOL);
                v.check(kind == Ok(LocusKind::RealCircle), || {
                    format!("case {case}: {kind:?} at {k} outside the roots")
                });
            }
        }
    }

    let mut sampled = 0;
    for case in 0..200 {
        let (c1, c2) = gen::crossing_pair(&mut rng);
        let kt = k_thresholds(&c1, &c2, TOL);
        v.check(kt == KThresholds::NoRealRoots, || {
            format!("crossing case {case}: {kt:?}")
        });
        let pts = circle_intersection(&c1, &c2, TOL).unwrap();
        v.check(pts.len() == 2, || {
            format!("crossing case {case}: {} intersection points", pts.len())
        });
        let mut ks = vec![-1.0, 0.5, 2.0];
        while ks.len() < 6 {
            let k: f64 = rng.random_range(-10.0..10.0);
            if k != 1.0 {
                ks.push(k);
            }
        }
        for k in ks {
            sampled += 1;
            match generalized_locus(&c1, &c2, PowerRatio::finite(k).unwrap(), TOL) {
                Ok(Locus::RealCircle(kc)) => {
                    for p in &pts {
                        let off = (p.dist(kc.center) - kc.radius).abs();
                        v.check(off <= 1e-8 * kc.radius.max(1.0), || {
                            format!("crossing case {case}, k={k}: off by {off:e}")
                        });
                    }
                }
                other => v.check(false, || format!("crossing case {case}, k={k}: {other:?}")),
            }
        }
    }
    v.note(format!("{sampled} ratios on crossing pairs"));
    v
}

fn classic_reduction() -> Verdict {
    let mut v = Verdict::new();
    let mut rng = gen::rng(SEED, 4);
    let mut worst = 0.0f64;
    for case in 0..1000 {
        let [a, b, c] = gen::scalene(&mut rng);
        let x = classic_apollonius(a, b, c, TOL).unwrap().circle().unwrap();
        let y =
            kth(
                &apollonius_of_point(a, &Circle::point_circle(b), &Circle::point_circle(c), TOL)
                    .unwrap(),
            );
        let m = x.center.norm().max(x.radius);
        let ec = x.center.dist(y.center) / m;
        let er = (x.radius - y.radius).abs() / x.radius;
        worst = worst.max(ec).max(er);
        v.check(ec <= 1e-12 && er <= 1e-12, || {
            format!("case {case}: center {ec:e}, radius {er:e}")
        });
    }
    v.note(format!("worst {worst:.1e}"));
    v
}

fn triangle_theorems() -> Verdict {
    let mut v = Verdict::new();
    let mut rng = gen::rng(SEED, 5);
    for case in 0..500 {
        let [a, b, c] = gen::scalene(&mut rng);
        let scale = a.dist(b).max(b.dist(c)).max(c.dist(a));
        let s2 = scale * scale;
        let k_a = classic_apollonius(a, b, c, TOL).unwrap().circle().unwrap();
        let (fi, fe) = bisector_feet(a, b, c, TOL).unwrap();
        for f in [fi, fe] {
            let r = power(&k_a, f).abs();
            v.check(r <= 1e-9 * s2, || {
                format!("case {case}: foot residual {r:e}")
            });
        }
        let o = circumcircle(a, b, c, TOL).unwrap().center;
        let t = (power(&k_a, o) - a.dist2(o)).abs();
        v.check(t <= 1e-9 * s2, || {
            format!("case {case}: tangency residual {t:e}")
        });

        let d = lemoine_data(a, b, c, TOL).unwrap();
        for (k, n) in [(&d.k_a, "A"), (&d.k_b, "B"), (&d.k_c, "C")] {
            for s in [d.s1, d.s2] {
                let off = (s.dist(k.center) - k.radius).abs();
                v.check(off <= 1e-8 * scale, || {
                    format!("case {case}: isodynamic point off K_{n} by {off:e}")
                });
            }
        }
        let m_line = line_through(d.m_a, d.m_b, TOL).unwrap();
        let off = point_line_distance(&m_line, d.m_c);
        v.check(off <= 1e-8 * scale, || {
            format!("case {case}: M_C off the line by {off:e}")
        });
        let s_line = line_through(d.s1, d.s2, TOL).unwrap();
        let off = point_line_distance(&s_line, d.o);
        v.check(off <= 1e-8 * scale, || {
            format!("case {case}: O off S1S2 by {off:e}")
        });
    }
    v
}

struct Triples {
    equal: Vec<CircleTriple>,
    equilateral: Vec<CircleTriple>,
    generic: Vec<CircleTriple>,
}

fn triples() -> Triples {
    let mut rng = gen::rng(SEED, 6);
    Triples {
        equal: (0..500)
            .map(|_| gen::equal_radius_triple(&mut rng))
            .collect(),
        equilateral: (0..500)
            .map(|_| gen::equilateral_triple(&mut rng))
            .collect(),
        generic: (0..1000).map(|_| gen::generic_triple(&mut rng)).collect(),
    }
}

/// The three collinearity predicates, computed here from scratch.
fn predicates(t: &CircleTriple, m: &[Point; 3]) -> [bool; 3] {
    let c = |i: usize| *t.circle(i % 3);
    let p = |i: usize, j: usize| power(&c(j), c(i).center);
    let menelaus: f64 = (0..3).map(|i| p(i, i + 1) / p(i, i + 2)).product();
    let (mut lhs, mut rhs) = (0.0, 0.0);
    for i in 0..3 {
        let (j, k) = (i + 1, i + 2);
        let (dij, dik) = (
            c(i).center.dist2(c(j).center),
            c(i).center.dist2(c(k).center),
        );
        let (rj, rk) = (c(j).radius.powi(2), c(k).radius.powi(2));
        lhs += dij * dik * (rj - rk);
        rhs += rj * rk * (dij - dik);
    }
    let s = t.scale();
    let spread = m[0].dist(m[1]).max(m[1].dist(m[2])).max(m[0].dist(m[2]));
    let area = (m[1] - m[0]).cross(m[2] - m[0]).abs();
    [
        (menelaus - 1.0).abs() <= TOL.bound(1.0),
        (lhs - rhs).abs() <= TOL.bound(s.powi(6)),
        area <= TOL.bound(spread * spread),
    ]
}

fn criterion_equivalence(all: &Triples) -> Verdict {
    let mut v = Verdict::new();
    let families: [(&str, &[CircleTriple], Option<bool>); 3] = [
        ("equal radii", &all.equal, Some(true)),
        ("equilateral", &all.equilateral, Some(true)),
        ("generic", &all.generic, None),
    ];
    let mut collinear_generic = 0;
    for (name, set, expect) in families {
        for (case, t) in set.iter().enumerate() {
            let report = match generalized_centers(t, TOL) {
                Ok(r) => r,
                Err(e) => {
                    v.check(false, || format!("{name} case {case}: {e}"));
                    continue;
                }
            };
            let [a, b, c] = predicates(t, &report.m);
            v.check(a == b && b == c && c == report.collinear, || {
                format!(
                    "{name} case {case}: menelaus {a}, balance {b}, geometry {c}, reported {}",
                    report.collinear
                )
            });
            if let Some(e) = expect {
                v.check(report.collinear == e, || {
                    format!("{name} case {case}: collinear = {}", report.collinear)
                });
            } else if report.collinear {
                collinear_generic += 1;
            }
        }
    }
    let worked = CircleTriple::new(
        [
            Circle::new(Point::new(0.0, 0.0), 1.0),
            Circle::new(Point::new(5.0, 0.0), 2.0),
            Circle::new(Point::new(1.0, 4.0), 3.0),
        ],
        TOL,
    )
    .unwrap();
    let m = menelaus_product(&worked, TOL).unwrap();
    let want = 23.0 / 16.0;
    v.check((m - want).abs() <= 1e-12 * want, || {
        format!("worked example gives {m}")
    });
    v.note(format!("{collinear_generic}/1000 generic collinear"));
    v
}

fn concurrence(all: &Triples) -> Verdict {
    let mut v = Verdict::new();
    for (case, t) in all.equal.iter().enumerate() {
        let axes = match k_radical_axes(t, TOL) {
            Ok(a) => a,
            Err(e) => {
                v.check(false, || format!("equal radii case {case}: {e}"));
                continue;
            }
        };
        let spread = axes.spread();
        v.check(spread <= 1e-8, || {
            format!("case {case}: axes differ by {spread:e}")
        });
        for (i, l) in axes.lines.iter().enumerate() {
            let off = point_line_distance(l, t.circumcenter());
            v.check(off <= 1e-8 * t.scale(), || {
                format!("case {case}: l_{i} misses O by {off:e}")
            });
        }
    }
    let mut compared = 0;
    for t in all.equal.iter().chain(&all.equilateral).chain(&all.generic) {
        let s2 = t.scale().powi(2);
        for i in 0..3 {
            let k = t.k_circle(i, TOL).map(|l| kth(&l));
            let closed = circumcenter_power(t, i, TOL);
            match (k, closed) {
                (Ok(k), Ok(closed)) => {
                    compared += 1;
                    let direct = power(&k, t.circumcenter());
                    v.check((closed - direct).abs() <= 1e-9 * s2, || {
                        format!("closed form {closed} vs direct {direct}")
                    });
                }
                (k, closed) => v.check(false, || format!("{k:?} / {closed:?}")),
            }
        }
    }
    v.note(format!("{compared} closed-form comparisons"));
    v
}

fn determinism() -> Verdict {
    let mut v = Verdict::new();
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for name in ["locus", "lemoine", "concurrence"] {
        let text = fs::read_to_string(dir.join(format!("{name}.scene"))).unwrap();
        let run = || {
            let s = parse_scene(&text).unwrap();
            let r = run_scene(&s, TOL);
            (emit_report(&r), emit_svg(&s, &r).unwrap())
        };
        let (first, second) = (run(), run());
        v.check(first == second, || format!("{name}: two runs differ"));
        let stored = (
            fs::read_to_string(dir.join(format!("{name}.report"))).unwrap(),
            fs::read_to_string(dir.join(format!("{name}.svg"))).unwrap(),
        );
        v.check(first == stored, || {
            format!("{name}: output differs from the golden files")
        });
    }
    let selftest = || {
        Command::new(env!("CARGO_BIN_EXE_apollonius"))
            .args(["selftest", "--seed", "0"])
            .output()
            .unwrap()
    };
    let (a, b) = (selftest(), selftest());
    v.check(a.status.success(), || {
        format!("selftest exit {:?}", a.status.code())
    });
    v.check(a.stdout == b.stdout, || {
        "selftest output differs between runs".into()
    });
    v
}

type Criterion<'a> = Box<dyn Fn() -> Verdict + 'a>;

fn main() -> ExitCode {
    let all = triples();
    let criteria: [(&str, Criterion); 8] = [
        ("locus residual", Box::new(locus_residual)),
        ("oracle equivalence", Box::new(oracle_equivalence)),
        ("threshold correctness", Box::new(thresholds)),
        ("classic reduction", Box::new(classic_reduction)),
        ("triangle theorems", Box::new(triangle_theorems)),
        (
            "criterion equivalence",
            Box::new(|| criterion_equivalence(&all)),
        ),
        ("radical axis concurrence", Box::new(|| concurrence(&all))),
        ("determinism", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let v = run();
        let status = if v.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        let notes = if v.notes.is_empty() {
            String::new()
        } else {
            format!(" ({})", v.notes.join(", "))
        };
        println!("criterion {}: {status} {name}{notes}", n + 1);
        if !v.failures.is_empty() {
            failed += 1;
            for f in v.failures.iter().take(5) {
                println!("    {f}");
            }
            if v.failures.len() > 5 {
                println!("    ... {} more", v.failures.len() - 5);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
