//! Scene files, text reports and SVG rendering.
//!
//! A scene is a line-oriented text file:
//!
//! ```text
//! # two circles and a locus
//! circle G1 0 0 1
//! circle G2 3 0 1
//! point  A  2 2
//! query locus G1 G2 2
//! query apollonius A G1 G2
//! ```
//!
//! Statements are `circle <id> <cx> <cy> <r>`, `point <id> <x> <y>` and
//! `query <kind> <args...>` with kinds `power <pid> <cid>`,
//! `radical <cid> <cid>`, `locus <cid> <cid> <ratio>`,
//! `classify <cid> <cid> <ratio>`, `thresholds <cid> <cid>`,
//! `apollonius <pid> <cid> <cid>`, `classic <pid> <pid> <pid>`,
//! `lemoine <cid> <cid> <cid>` and `concurrence <cid> <cid> <cid>`.
//! Ids must be defined before they are used. Ratios are `p/q`, a decimal, or
//! `inf`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::classic::{classic_apollonius, ClassicApollonius};
use crate::error::Error;
use crate::general::{
    apollonius_of_point, classify, generalized_locus, k_thresholds, KThresholds, Locus, LocusKind,
    PowerRatio,
};
use crate::geom::{point_line_distance, Circle, Line, Point, Tolerance};
use crate::power::{power, radical_axis};
use crate::triple::{
    circumcenter_power, generalized_centers, k_radical_axes, lemoine_line_generalized,
    CircleTriple, RadicalAxes, TripleReport,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SceneError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: unknown id '{id}'")]
    UnknownId { line: usize, id: String },
    #[error("line {line}: duplicate id '{id}'")]
    DuplicateId { line: usize, id: String },
    #[error("line {line}: negative radius")]
    NegativeRadius { line: usize },
    #[error("nothing to render")]
    NothingToRender,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Definition {
    Circle(String, Circle),
    Point(String, Point),
}

impl Definition {
    pub fn id(&self) -> &str {
        match self {
            Definition::Circle(id, _) | Definition::Point(id, _) => id,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Query {
    Power {
        point: String,
        circle: String,
    },
    RadicalAxis(String, String),
    Locus(String, String, PowerRatio),
    Classify(String, String, PowerRatio),
    Thresholds(String, String),
    ApolloniusPoint {
        point: String,
        c1: String,
        c2: String,
    },
    Classic(String, String, String),
    Lemoine(String, String, String),
    Concurrence(String, String, String),
}

impl Query {
    pub fn label(&self) -> &'static str {
        match self {
            Query::Power { .. } => "power",
            Query::RadicalAxis(..) => "radical",
            Query::Locus(..) => "locus",
            Query::Classify(..) => "classify",
            Query::Thresholds(..) => "thresholds",
            Query::ApolloniusPoint { .. } => "apollonius",
            Query::Classic(..) => "classic",
            Query::Lemoine(..) => "lemoine",
            Query::Concurrence(..) => "concurrence",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Scene {
    /// Circles and points in definition order.
    pub definitions: Vec<Definition>,
    pub queries: Vec<Query>,
}

impl Scene {
    pub fn circle(&self, id: &str) -> Option<&Circle> {
        self.definitions.iter().find_map(|d| match d {
            Definition::Circle(i, c) if i == id => Some(c),
            _ => None,
        })
    }

    pub fn point(&self, id: &str) -> Option<Point> {
        self.definitions.iter().find_map(|d| match d {
            Definition::Point(i, p) if i == id => Some(*p),
            _ => None,
        })
    }

    pub fn circles(&self) -> impl Iterator<Item = (&str, &Circle)> {
        self.definitions.iter().filter_map(|d| match d {
            Definition::Circle(i, c) => Some((i.as_str(), c)),
            _ => None,
        })
    }

    pub fn points(&self) -> impl Iterator<Item = (&str, Point)> {
        self.definitions.iter().filter_map(|d| match d {
            Definition::Point(i, p) => Some((i.as_str(), *p)),
            _ => None,
        })
    }

    fn defines(&self, id: &str) -> bool {
        self.definitions.iter().any(|d| d.id() == id)
    }

    fn is_empty(&self) -> bool {
        self.definitions.is_empty() && self.queries.is_empty()
    }
}

fn valid_id(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Decimal with optional sign and exponent; no `inf`/`nan` spellings.
fn parse_number(tok: &str, line: usize) -> Result<f64, SceneError> {
    let plain = tok
        .chars()
        .all(|c| c.is_ascii_digit() || matches!(c, '+' | '-' | '.' | 'e' | 'E'));
    match tok.parse::<f64>() {
        Ok(v) if plain && v.is_finite() => Ok(v),
        _ => Err(SceneError::Parse {
            line,
            message: format!("invalid number '{tok}'"),
        }),
    }
}

struct LineParser<'a> {
    scene: &'a Scene,
    line: usize,
}

impl LineParser<'_> {
    fn err(&self, message: impl Into<String>) -> SceneError {
        SceneError::Parse {
            line: self.line,
            message: message.into(),
        }
    }

    fn arity(&self, what: &str, args: &[&str], n: usize) -> Result<(), SceneError> {
        if args.len() == n {
            Ok(())
        } else {
            Err(self.err(format!("'{what}' takes {n} arguments, got {}", args.len())))
        }
    }

    fn circle(&self, id: &str) -> Result<String, SceneError> {
        if self.scene.circle(id).is_some() {
            Ok(id.to_string())
        } else if self.scene.defines(id) {
            Err(self.err(format!("'{id}' is a point, expected a circle")))
        } else {
            Err(SceneError::UnknownId {
                line: self.line,
                id: id.to_string(),
            })
        }
    }

    fn point(&self, id: &str) -> Result<String, SceneError> {
        if self.scene.point(id).is_some() {
            Ok(id.to_string())
        } else if self.scene.defines(id) {
            Err(self.err(format!("'{id}' is a circle, expected a point")))
        } else {
            Err(SceneError::UnknownId {
                line: self.line,
                id: id.to_string(),
            })
        }
    }

    fn ratio(&self, tok: &str) -> Result<PowerRatio, SceneError> {
        tok.parse()
            .map_err(|_| self.err(format!("invalid ratio '{tok}'")))
    }

    fn new_id(&self, id: &str) -> Result<String, SceneError> {
        if !valid_id(id) {
            return Err(self.err(format!("invalid id '{id}'")));
        }
        if self.scene.defines(id) {
            return Err(SceneError::DuplicateId {
                line: self.line,
                id: id.to_string(),
            });
        }
        Ok(id.to_string())
    }

    fn query(&self, args: &[&str]) -> Result<Query, SceneError> {
        let Some((&kind, rest)) = args.split_first() else {
            return Err(self.err("missing query kind"));
        };
        let n = match kind {
            "power" | "radical" | "thresholds" => 2,
            "locus" | "classify" | "apollonius" | "classic" | "lemoine" | "concurrence" => 3,
            other => return Err(self.err(format!("unknown query '{other}'"))),
        };
        self.arity(kind, rest, n)?;
        let r = rest;
        Ok(match kind {
            "power" => Query::Power {
                point: self.point(r[0])?,
                circle: self.circle(r[1])?,
            },
            "radical" => Query::RadicalAxis(self.circle(r[0])?, self.circle(r[1])?),
            "thresholds" => Query::Thresholds(self.circle(r[0])?, self.circle(r[1])?),
            "locus" => Query::Locus(self.circle(r[0])?, self.circle(r[1])?, self.ratio(r[2])?),
            "classify" => {
                Query::Classify(self.circle(r[0])?, self.circle(r[1])?, self.ratio(r[2])?)
            }
            "apollonius" => Query::ApolloniusPoint {
                point: self.point(r[0])?,
                c1: self.circle(r[1])?,
                c2: self.circle(r[2])?,
            },
            "classic" => Query::Classic(self.point(r[0])?, self.point(r[1])?, self.point(r[2])?),
            "lemoine" => Query::Lemoine(self.circle(r[0])?, self.circle(r[1])?, self.circle(r[2])?),
            _ => Query::Concurrence(self.circle(r[0])?, self.circle(r[1])?, self.circle(r[2])?),
        })
    }
}

pub fn parse_scene(text: &str) -> Result<Scene, SceneError> {
    let mut scene = Scene::default();
    for (idx, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        let Some((&head, args)) = toks.split_first() else {
            continue;
        };
        let p = LineParser {
            scene: &scene,
            line: idx + 1,
        };
        let line = idx + 1;
        let def = match head {
            "circle" => {
                p.arity("circle", args, 4)?;
                let id = p.new_id(args[0])?;
                let (x, y, r) = (
                    parse_number(args[1], line)?,
                    parse_number(args[2], line)?,
                    parse_number(args[3], line)?,
                );
                if r < 0.0 {
                    return Err(SceneError::NegativeRadius { line });
                }
                Definition::Circle(id, Circle::new(Point::new(x, y), r))
            }
            "point" => {
                p.arity("point", args, 3)?;
                let id = p.new_id(args[0])?;
                let (x, y) = (parse_number(args[1], line)?, parse_number(args[2], line)?);
                Definition::Point(id, Point::new(x, y))
            }
            "query" => {
                let q = p.query(args)?;
                scene.queries.push(q);
                continue;
            }
            other => return Err(p.err(format!("unknown statement '{other}'"))),
        };
        scene.definitions.push(def);
    }
    Ok(scene)
}

/// Result of a three-circle collinearity query.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LemoineOutcome {
    pub report: TripleReport,
    pub line: Option<Line>,
}

/// Result of a radical-axis concurrence query.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConcurrenceOutcome {
    pub axes: RadicalAxes,
    pub k_circles: [Circle; 3],
    /// Closed-form power of the circumcenter with respect to each `K_i`.
    pub powers: [f64; 3],
    pub coincident: bool,
    pub through_circumcenter: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Power(f64),
    Line(Line),
    Locus(Locus),
    Kind(LocusKind),
    Thresholds(KThresholds),
    Classic(ClassicApollonius),
    Lemoine(LemoineOutcome),
    Concurrence(ConcurrenceOutcome),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    pub query: Query,
    pub outcome: Result<Outcome, Error>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    pub records: Vec<Record>,
}

fn triple_of(s: &Scene, ids: [&String; 3], tol: Tolerance) -> Result<CircleTriple, Error> {
    let c = |i: usize| {
        *s.circle(ids[i])
            .expect("scene ids are validated at parse time")
    };
    CircleTriple::new([c(0), c(1), c(2)], tol)
}

fn run_query(s: &Scene, q: &Query, tol: Tolerance) -> Result<Outcome, Error> {
    let c = |id: &String| s.circle(id).expect("scene ids are validated at parse time");
    let p = |id: &String| s.point(id).expect("scene ids are validated at parse time");
    Ok(match q {
        Query::Power { point, circle } => Outcome::Power(power(c(circle), p(point))),
        Query::RadicalAxis(a, b) => Outcome::Line(radical_axis(c(a), c(b), tol)?),
        Query::Locus(a, b, k) => Outcome::Locus(generalized_locus(c(a), c(b), *k, tol)?),
        Query::Classify(a, b, k) => Outcome::Kind(classify(c(a), c(b), *k, tol)?),
        Query::Thresholds(a, b) => Outcome::Thresholds(k_thresholds(c(a), c(b), tol)),
        Query::ApolloniusPoint { point, c1, c2 } => {
            Outcome::Locus(apollonius_of_point(p(point), c(c1), c(c2), tol)?)
        }
        Query::Classic(a, b, cc) => Outcome::Classic(classic_apollonius(p(a), p(b), p(cc), tol)?),
        Query::Lemoine(a, b, cc) => {
            let t = triple_of(s, [a, b, cc], tol)?;
            let report = generalized_centers(&t, tol)?;
            let line = if report.collinear {
                Some(lemoine_line_generalized(&t, tol)?)
            } else {
                None
            };
            Outcome::Lemoine(LemoineOutcome { report, line })
        }
        Query::Concurrence(a, b, cc) => {
            let t = triple_of(s, [a, b, cc], tol)?;
            let axes = k_radical_axes(&t, tol)?;
            let mut powers = [0.0; 3];
            let mut k_circles = [Circle::point_circle(Point::ORIGIN); 3];
            for i in 0..3 {
                powers[i] = circumcenter_power(&t, i, tol)?;
                k_circles[i] = *t
                    .k_circle(i, tol)?
                    .as_circle()
                    .expect("k_radical_axes checked that every K_i is a real circle");
            }
            let scale = t.scale();
            let coincident = axes.lines[0].approx_eq(&axes.lines[1], tol, scale)
                && axes.lines[1].approx_eq(&axes.lines[2], tol, scale);
            let through_circumcenter = axes
                .lines
                .iter()
                .all(|l| point_line_distance(l, axes.o) <= tol.bound(scale));
            Outcome::Concurrence(ConcurrenceOutcome {
                axes,
                k_circles,
                powers,
                coincident,
                through_circumcenter,
            })
        }
    })
}

/// Runs every query in order; failures become error records.
pub fn run_scene(s: &Scene, tol: Tolerance) -> Report {
    Report {
        records: s
            .queries
            .iter()
            .map(|q| Record {
                query: q.clone(),
                outcome: run_query(s, q, tol),
            })
            .collect(),
    }
}

/// Fixed 9-decimal rendering, rounded half to even, without negative zero.
pub fn fmt_num(x: f64) -> String {
    fmt_fixed(x, 9)
}

fn fmt_fixed(x: f64, decimals: usize) -> String {
    let s = format!("{x:.decimals$}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => s,
    }
}

fn fmt_point(p: Point) -> String {
    format!("({}, {})", fmt_num(p.x), fmt_num(p.y))
}

fn fmt_line(l: &Line) -> String {
    format!(
        "line normal={} offset={}",
        fmt_point(l.normal()),
        fmt_num(l.offset())
    )
}

/// Text for a locus, e.g. `circle center=(6.000000000, 0.000000000) r=4.358898944`.
pub fn format_locus(l: &Locus) -> String {
    match l {
        Locus::RealCircle(c) => format!(
            "circle center={} r={}",
            fmt_point(c.center),
            fmt_num(c.radius)
        ),
        Locus::Line(line) => fmt_line(line),
        Locus::SinglePoint(p) => format!("point {}", fmt_point(*p)),
        Locus::Empty => "empty".to_string(),
        Locus::WholePlane => "whole plane".to_string(),
    }
}

pub fn format_thresholds(t: &KThresholds) -> String {
    match t {
        KThresholds::TwoRoots { k_minus, k_plus } => {
            format!("two roots k-={} k+={}", fmt_num(*k_minus), fmt_num(*k_plus))
        }
        KThresholds::DoubleRoot(k) => format!("double root k={}", fmt_num(*k)),
        KThresholds::NoRealRoots => "no real roots".to_string(),
        KThresholds::LinearCase(k) => format!("linear k={}", fmt_num(*k)),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Body of a record line, without the query label.
pub fn format_outcome(o: &Outcome) -> String {
    match o {
        Outcome::Power(v) => fmt_num(*v),
        Outcome::Line(l) => fmt_line(l),
        Outcome::Locus(l) => format_locus(l),
        Outcome::Kind(k) => k.to_string(),
        Outcome::Thresholds(t) => format_thresholds(t),
        Outcome::Classic(c) => format_locus(&c.locus),
        Outcome::Lemoine(l) => {
            let r = &l.report;
            let mut s = format!(
                "m1={} m2={} m3={} menelaus={} lhs={} rhs={} collinear={}",
                fmt_point(r.m[0]),
                fmt_point(r.m[1]),
                fmt_point(r.m[2]),
                fmt_num(r.menelaus),
                fmt_num(r.balance_lhs),
                fmt_num(r.balance_rhs),
                yes_no(r.collinear)
            );
            if let Some(line) = &l.line {
                let _ = write!(s, " {}", fmt_line(line));
            }
            s
        }
        Outcome::Concurrence(c) => format!(
            "{} o={} coincident={} through_o={} powers=({}, {}, {})",
            fmt_line(&c.axes.lines[0]),
            fmt_point(c.axes.o),
            yes_no(c.coincident),
            yes_no(c.through_circumcenter),
            fmt_num(c.powers[0]),
            fmt_num(c.powers[1]),
            fmt_num(c.powers[2])
        ),
    }
}

pub fn format_record(r: &Record) -> String {
    match &r.outcome {
        Ok(o) => format!("{}: {}", r.query.label(), format_outcome(o)),
        Err(e) => format!("error: {e}"),
    }
}

/// One line per record, newline-terminated.
pub fn emit_report(r: &Report) -> String {
    let mut out = String::new();
    for rec in &r.records {
        out.push_str(&format_record(rec));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Stroke {
    Solid,
    Dashed,
}

#[derive(Debug, Clone, PartialEq)]
enum Primitive {
    Circle(Circle, Stroke),
    Line(Line),
    Dot(Point, String),
    Marker(Point, String),
}

fn locus_primitives(l: &Locus, label: &str, out: &mut Vec<Primitive>) {
    match l {
        Locus::RealCircle(c) => out.push(Primitive::Circle(*c, Stroke::Dashed)),
        Locus::Line(line) => out.push(Primitive::Line(*line)),
        Locus::SinglePoint(p) => out.push(Primitive::Marker(*p, label.to_string())),
        Locus::Empty | Locus::WholePlane => {}
    }
}

fn primitives(s: &Scene, r: &Report) -> Vec<Primitive> {
    let mut out = Vec::new();
    for d in &s.definitions {
        match d {
            Definition::Circle(_, c) => out.push(Primitive::Circle(*c, Stroke::Solid)),
            Definition::Point(id, p) => out.push(Primitive::Dot(*p, id.clone())),
        }
    }
    for rec in &r.records {
        let Ok(o) = &rec.outcome else { continue };
        let label = rec.query.label();
        match o {
            Outcome::Line(l) => out.push(Primitive::Line(*l)),
            Outcome::Locus(l) => locus_primitives(l, label, &mut out),
            Outcome::Classic(c) => locus_primitives(&c.locus, label, &mut out),
            Outcome::Lemoine(l) => {
                for k in &l.report.k_circles {
                    locus_primitives(k, label, &mut out);
                }
                if let Some(line) = l.line {
                    out.push(Primitive::Line(line));
                }
            }
            Outcome::Concurrence(c) => {
                for k in &c.k_circles {
                    out.push(Primitive::Circle(*k, Stroke::Dashed));
                }
                out.push(Primitive::Line(c.axes.lines[0]));
                out.push(Primitive::Marker(c.axes.o, "O".to_string()));
            }
            Outcome::Power(_) | Outcome::Kind(_) | Outcome::Thresholds(_) => {}
        }
    }
    out
}

/// Axis-aligned box `(x0, y0, x1, y1)`.
type Bounds = (f64, f64, f64, f64);

fn bounds(prims: &[Primitive]) -> Option<Bounds> {
    let mut b: Option<Bounds> = None;
    let mut add = |x0: f64, y0: f64, x1: f64, y1: f64| {
        b = Some(match b {
            None => (x0, y0, x1, y1),
            Some((a, bb, c, d)) => (a.min(x0), bb.min(y0), c.max(x1), d.max(y1)),
        });
    };
    for p in prims {
        match p {
            Primitive::Circle(c, _) => add(
                c.center.x - c.radius,
                c.center.y - c.radius,
                c.center.x + c.radius,
                c.center.y + c.radius,
            ),
            Primitive::Dot(q, _) | Primitive::Marker(q, _) => add(q.x, q.y, q.x, q.y),
            Primitive::Line(_) => {}
        }
    }
    b
}

/// Portion of the line inside the box, if any.
fn clip_line(l: &Line, (x0, y0, x1, y1): Bounds) -> Option<(Point, Point)> {
    let center = Point::new(0.5 * (x0 + x1), 0.5 * (y0 + y1));
    let base = l.project(center);
    let dir = l.direction();
    let (mut t0, mut t1) = (f64::NEG_INFINITY, f64::INFINITY);
    for (p, d, lo, hi) in [(base.x, dir.x, x0, x1), (base.y, dir.y, y0, y1)] {
        if d == 0.0 {
            if p < lo || p > hi {
                return None;
            }
        } else {
            let (a, b) = ((lo - p) / d, (hi - p) / d);
            t0 = t0.max(a.min(b));
            t1 = t1.min(a.max(b));
        }
    }
    (t0 < t1).then(|| (base + dir * t0, base + dir * t1))
}

/// Nominal rendered width in pixels; dot sizes and strokes are given in pixels.
const CANVAS_WIDTH: f64 = 800.0;

/// SVG 1.1 drawing of the scene and the computed geometry.
///
/// Input circles are solid, computed loci dashed. The view box is the bounding
/// box of every finite primitive padded by 10% on each side; lines are clipped
/// to it. The y axis points up.
pub fn emit_svg(s: &Scene, r: &Report) -> Result<String, SceneError> {
    if s.is_empty() {
        return Err(SceneError::NothingToRender);
    }
    let prims = primitives(s, r);
    let (mut x0, mut y0, mut x1, mut y1) = bounds(&prims).ok_or(SceneError::NothingToRender)?;
    for (lo, hi) in [(&mut x0, &mut x1), (&mut y0, &mut y1)] {
        if *hi - *lo < 1.0 {
            let mid = 0.5 * (*lo + *hi);
            *lo = mid - 0.5;
            *hi = mid + 0.5;
        }
    }
    let (px, py) = (0.1 * (x1 - x0), 0.1 * (y1 - y0));
    let view = (x0 - px, y0 - py, x1 + px, y1 + py);
    let (w, h) = (view.2 - view.0, view.3 - view.1);
    let unit = w / CANVAS_WIDTH;
    let n = |v: f64| fmt_fixed(v, 6);
    // plane y up, SVG y down
    let fy = |y: f64| n(-y);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">",
        CANVAS_WIDTH,
        n(CANVAS_WIDTH * h / w),
        n(view.0),
        fy(view.3),
        n(w),
        n(h)
    );
    let stroke = n(unit);
    let _ = writeln!(
        out,
        "<g fill=\"none\" stroke=\"black\" stroke-width=\"{stroke}\" font-family=\"sans-serif\" font-size=\"{}\">",
        n(12.0 * unit)
    );
    let dash = format!("{} {}", n(6.0 * unit), n(4.0 * unit));
    for p in &prims {
        match p {
            Primitive::Circle(c, style) => {
                let extra = match style {
                    Stroke::Solid => String::new(),
                    Stroke::Dashed => format!(" stroke=\"steelblue\" stroke-dasharray=\"{dash}\""),
                };
                let _ = writeln!(
                    out,
                    "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"{extra}/>",
                    n(c.center.x),
                    fy(c.center.y),
                    n(c.radius)
                );
            }
            Primitive::Line(l) => {
                if let Some((a, b)) = clip_line(l, view) {
                    let _ = writeln!(
                        out,
                        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"firebrick\" stroke-dasharray=\"{dash}\"/>",
                        n(a.x),
                        fy(a.y),
                        n(b.x),
                        fy(b.y)
                    );
                }
            }
            Primitive::Dot(q, label) => {
                let _ = writeln!(
                    out,
                    "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"black\" stroke=\"none\"/>",
                    n(q.x),
                    fy(q.y),
                    n(2.0 * unit)
                );
                let _ = writeln!(
                    out,
                    "<text x=\"{}\" y=\"{}\" fill=\"black\" stroke=\"none\">{label}</text>",
                    n(q.x + 4.0 * unit),
                    fy(q.y + 4.0 * unit)
                );
            }
            Primitive::Marker(q, label) => {
                let a = 4.0 * unit;
                let _ = writeln!(
                    out,
                    "<path d=\"M {} {} L {} {} M {} {} L {} {}\" stroke=\"firebrick\"/>",
                    n(q.x - a),
                    fy(q.y - a),
                    n(q.x + a),
                    fy(q.y + a),
                    n(q.x - a),
                    fy(q.y + a),
                    n(q.x + a),
                    fy(q.y - a)
                );
                let _ = writeln!(
                    out,
                    "<text x=\"{}\" y=\"{}\" fill=\"firebrick\" stroke=\"none\">{label}</text>",
                    n(q.x + 1.5 * a),
                    fy(q.y + 1.5 * a)
                );
            }
        }
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}
