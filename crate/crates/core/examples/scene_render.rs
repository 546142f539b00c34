//! Runs a scene file, prints the report and optionally writes an SVG.
//!
//! ```text
//! cargo run --example scene_render -- examples/scenes/triangle.scene out.svg
//! ```

use std::{env, fs, process};

use apollonius::scene::{emit_report, emit_svg, parse_scene, run_scene};
use apollonius::Tolerance;

fn main() {
    let mut args = env::args().skip(1);
    let path = args.next().unwrap_or_else(|| {
        concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/examples/scenes/two_circles.scene"
        )
        .to_string()
    });
    let text = fs::read_to_string(&path).unwrap_or_else(|e| {
        eprintln!("{path}: {e}");
        process::exit(1);
    });
    let scene = parse_scene(&text).unwrap_or_else(|e| {
        eprintln!("{path}: {e}");
        process::exit(1);
    });
    let report = run_scene(&scene, Tolerance::DEFAULT);
    print!("{}", emit_report(&report));

    if let Some(out) = args.next() {
        let svg = emit_svg(&scene, &report).expect("scene has geometry");
        fs::write(&out, svg).unwrap();
        eprintln!("wrote {out}");
    }
}
