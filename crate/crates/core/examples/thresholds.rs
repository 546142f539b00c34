//! Ratios at which the locus shrinks to a point.

use apollonius::scene::format_thresholds;
use apollonius::{classify, k_thresholds, Circle, KThresholds, Point, PowerRatio, Tolerance};

fn main() {
    let tol = Tolerance::DEFAULT;
    let pairs = [
        (
            "apart",
            Circle::new(Point::ORIGIN, 1.0),
            Circle::new(Point::new(4.0, 0.0), 1.0),
        ),
        (
            "nested",
            Circle::new(Point::ORIGIN, 5.0),
            Circle::new(Point::new(1.0, 0.0), 1.0),
        ),
        (
            "crossing",
            Circle::new(Point::ORIGIN, 2.0),
            Circle::new(Point::new(3.0, 0.0), 2.0),
        ),
        (
            "tangent",
            Circle::new(Point::ORIGIN, 1.0),
            Circle::new(Point::new(2.0, 0.0), 1.0),
        ),
        (
            "point circle",
            Circle::new(Point::ORIGIN, 1.0),
            Circle::point_circle(Point::new(3.0, 0.0)),
        ),
    ];
    for (name, g1, g2) in pairs {
        let t = k_thresholds(&g1, &g2, tol);
        println!("{name:>12}: {}", format_thresholds(&t));
        if let KThresholds::TwoRoots { k_minus, k_plus } = t {
            for k in [k_minus - 1.0, 0.5 * (k_minus + k_plus), k_plus + 1.0] {
                let kind = classify(&g1, &g2, PowerRatio::finite(k).unwrap(), tol).unwrap();
                println!("{:>14}k = {k:9.4} -> {kind}", "");
            }
        }
    }
}
