//! Power of a point and the radical axis of two circles.

use apollonius::{power, radical_axis, Circle, Point, Tolerance};

fn main() {
    let g1 = Circle::new(Point::new(0.0, 0.0), 2.0);
    let g2 = Circle::new(Point::new(5.0, 0.0), 1.0);

    for p in [
        Point::new(3.0, 0.0),
        Point::new(0.0, 0.0),
        Point::new(2.0, 0.0),
    ] {
        println!(
            "P1({:.1}, {:.1}) = {:7.3}    P2 = {:7.3}",
            p.x,
            p.y,
            power(&g1, p),
            power(&g2, p)
        );
    }

    let axis = radical_axis(&g1, &g2, Tolerance::DEFAULT).expect("distinct centers");
    let foot = axis.project(Point::ORIGIN);
    println!(
        "radical axis: normal {:?}, offset {:.4}",
        axis.normal(),
        axis.offset()
    );
    // equal powers everywhere on the axis
    for t in [-3.0, 0.0, 4.0] {
        let x = foot + axis.direction() * t;
        println!(
            "  at ({:.3}, {:.3}): {:.6} vs {:.6}",
            x.x,
            x.y,
            power(&g1, x),
            power(&g2, x)
        );
    }
}
