use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use apollonius::oracle::{verify_locus, ScanWindow};
use apollonius::scene::{
    emit_report, emit_svg, fmt_num, format_locus, format_thresholds, parse_scene, run_scene,
};
use apollonius::selftest;
use apollonius::{
    classic_apollonius, generalized_locus, k_thresholds, Circle, Point, PowerRatio, Tolerance,
};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

const USAGE: u8 = 1;
const MATH: u8 = 2;
const SELFTEST: u8 = 3;

#[derive(Parser)]
#[command(name = "apollonius", version, about = "Generalized Apollonius circles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scene file and print its report
    Run {
        file: PathBuf,
        /// Also write an SVG drawing
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Absolute and relative tolerance
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Locus of P1 = k P2
    Locus {
        #[arg(long, value_parser = parse_circle)]
        c1: Circle,
        #[arg(long, value_parser = parse_circle)]
        c2: Circle,
        /// p/q, a decimal, or inf
        #[arg(long, allow_hyphen_values = true)]
        k: PowerRatio,
    },
    /// Ratios at which the locus degenerates to a point
    Thresholds {
        #[arg(long, value_parser = parse_circle)]
        c1: Circle,
        #[arg(long, value_parser = parse_circle)]
        c2: Circle,
    },
    /// Apollonius circle of A with respect to B and C
    Classic {
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        a: Point,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        b: Point,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        c: Point,
    },
    /// Check the analytic locus against a grid scan
    Verify {
        #[arg(long, value_parser = parse_circle)]
        c1: Circle,
        #[arg(long, value_parser = parse_circle)]
        c2: Circle,
        #[arg(long, allow_hyphen_values = true)]
        k: PowerRatio,
        /// x0,x1,y0,y1
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        #[arg(long)]
        step: f64,
    },
    /// Run the randomized invariant suites
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn numbers<const N: usize>(s: &str) -> Result<[f64; N], String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| format!("'{t}': {e}")))
        .collect::<Result<_, _>>()?;
    let arr: [f64; N] = v
        .try_into()
        .map_err(|_| format!("expected {N} comma-separated numbers"))?;
    if arr.iter().all(|x| x.is_finite()) {
        Ok(arr)
    } else {
        Err("numbers must be finite".into())
    }
}

fn parse_circle(s: &str) -> Result<Circle, String> {
    let [x, y, r] = numbers(s)?;
    Circle::try_new(Point::new(x, y), r).map_err(|e| e.to_string())
}

fn parse_point(s: &str) -> Result<Point, String> {
    let [x, y] = numbers(s)?;
    Ok(Point::new(x, y))
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("apollonius: {msg}");
    ExitCode::from(code)
}

fn run(cmd: Command) -> ExitCode {
    let tol = Tolerance::DEFAULT;
    match cmd {
        Command::Run { file, svg, tol } => {
            let tol = match tol.map(Tolerance::uniform) {
                None => Tolerance::DEFAULT,
                Some(Ok(t)) => t,
                Some(Err(e)) => return fail(USAGE, e),
            };
            let text = match fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => return fail(USAGE, format!("{}: {e}", file.display())),
            };
            let scene = match parse_scene(&text) {
                Ok(s) => s,
                Err(e) => return fail(USAGE, format!("{}: {e}", file.display())),
            };
            let report = run_scene(&scene, tol);
            print!("{}", emit_report(&report));
            if let Some(path) = svg {
                let out = match emit_svg(&scene, &report) {
                    Ok(s) => s,
                    Err(e) => return fail(USAGE, e),
                };
                if let Err(e) = fs::write(&path, out) {
                    return fail(USAGE, format!("{}: {e}", path.display()));
                }
            }
            ExitCode::SUCCESS
        }
        Command::Locus { c1, c2, k } => match generalized_locus(&c1, &c2, k, tol) {
            Ok(l) => {
                println!("{}", format_locus(&l));
                ExitCode::SUCCESS
            }
            Err(e) => fail(MATH, e),
        },
        Command::Thresholds { c1, c2 } => {
            println!("{}", format_thresholds(&k_thresholds(&c1, &c2, tol)));
            ExitCode::SUCCESS
        }
        Command::Classic { a, b, c } => match classic_apollonius(a, b, c, tol) {
            Ok(k) => {
                println!("{}", format_locus(&k.locus));
                ExitCode::SUCCESS
            }
            Err(e) => fail(MATH, e),
        },
        Command::Verify {
            c1,
            c2,
            k,
            window,
            step,
        } => {
            let w = numbers::<4>(&window)
                .map_err(|e| e.to_string())
                .and_then(|[x0, x1, y0, y1]| {
                    ScanWindow::new(x0, x1, y0, y1, step).map_err(|e| e.to_string())
                });
            let w = match w {
                Ok(w) => w,
                Err(e) => return fail(USAGE, format!("window: {e}")),
            };
            let analytic = match generalized_locus(&c1, &c2, k, tol) {
                Ok(l) => l,
                Err(e) => return fail(MATH, e),
            };
            let r = verify_locus(&analytic, &c1, &c2, k, &w);
            println!("analytic: {}", format_locus(&analytic));
            println!("max residual: {}", fmt_num(r.max_residual));
            println!("max relative residual: {:e}", r.max_relative_residual);
            println!("scan hits: {}", r.scan_hits);
            println!("max hit distance: {}", fmt_num(r.max_hit_distance));
            if let Some(f) = &r.fit {
                println!(
                    "fit: circle center=({}, {}) r={} rms={:e}",
                    fmt_num(f.circle.center.x),
                    fmt_num(f.circle.center.y),
                    fmt_num(f.circle.radius),
                    f.rms_residual
                );
            }
            if let (Some(c), Some(rr)) = (r.center_error, r.radius_error) {
                println!("center error: {}", fmt_num(c));
                println!("radius error: {}", fmt_num(rr));
            }
            println!("agrees: {}", if r.agrees { "yes" } else { "no" });
            ExitCode::SUCCESS
        }
        Command::Selftest { seed } => {
            let suites = selftest::run_all(seed);
            let (mut passed, mut failed) = (0, 0);
            for s in &suites {
                println!("{s}");
                passed += s.passed;
                failed += s.failed;
            }
            println!("total: {passed} passed, {failed} failed");
            if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(SELFTEST)
            }
        }
    }
}

fn main() -> ExitCode {
    match Cli::try_parse() {
        Ok(cli) => run(cli.command),
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            ExitCode::SUCCESS
        }
        Err(e) => {
            let _ = e.print();
            ExitCode::from(USAGE)
        }
    }
}
