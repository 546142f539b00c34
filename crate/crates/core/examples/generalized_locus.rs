//! Sweeps the ratio k through every kind of locus for one pair of circles.

use apollonius::scene::format_locus;
use apollonius::{generalized_locus, Circle, Point, PowerRatio, Tolerance};

fn main() {
    let g1 = Circle::new(Point::new(0.0, 0.0), 1.0);
    let g2 = Circle::new(Point::new(3.0, 0.0), 1.0);
    let tol = Tolerance::DEFAULT;

    let ratios = [
        "2",
        "1/4",
        "1",
        "0",
        "inf",
        "-1",
        "-6.854101966249685",
        "-0.5",
    ];
    for text in ratios {
        let k: PowerRatio = text.parse().unwrap();
        let locus = generalized_locus(&g1, &g2, k, tol).unwrap();
        println!("k = {text:>20}: {}", format_locus(&locus));
    }

    // concentric circles: the unit ratio gives nothing or everything
    let inner = Circle::new(Point::ORIGIN, 1.0);
    for r in [1.0, 2.0] {
        let outer = Circle::new(Point::ORIGIN, r);
        let l = generalized_locus(&inner, &outer, PowerRatio::ONE, tol).unwrap();
        println!("concentric r2 = {r}: {}", l.kind());
    }
}
