//! Compares closed-form loci with a brute-force grid scan.

use apollonius::oracle::{verify_locus, ScanWindow};
use apollonius::scene::format_locus;
use apollonius::{generalized_locus, Circle, Point, PowerRatio, Tolerance};

fn main() {
    let window = ScanWindow::new(-20.0, 20.0, -20.0, 20.0, 0.05).unwrap();
    let g1 = Circle::new(Point::new(0.0, 0.0), 1.0);
    let g2 = Circle::new(Point::new(3.0, 0.0), 1.0);

    for text in ["2", "1/4", "1", "-1", "-3"] {
        let k: PowerRatio = text.parse().unwrap();
        let analytic = generalized_locus(&g1, &g2, k, Tolerance::DEFAULT).unwrap();
        let r = verify_locus(&analytic, &g1, &g2, k, &window);
        print!(
            "k = {text:>4}: {:<52} hits {:>4}",
            format_locus(&analytic),
            r.scan_hits
        );
        if let (Some(c), Some(rr)) = (r.center_error, r.radius_error) {
            print!("  fit error {c:.1e} / {rr:.1e}");
        }
        println!("  {}", if r.agrees { "agrees" } else { "DISAGREES" });
    }
}
