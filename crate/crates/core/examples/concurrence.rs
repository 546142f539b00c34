//! When the centers are collinear, the K circles share one radical axis,
//! and it passes through the circumcenter of the center triangle.

use apollonius::{
    circumcenter_power, k_radical_axes, point_line_distance, power, Circle, CircleTriple, Point,
    Tolerance,
};

fn main() {
    let tol = Tolerance::DEFAULT;
    let circles =
        [(0.0, 0.0), (5.0, 0.0), (1.0, 4.0)].map(|(x, y)| Circle::new(Point::new(x, y), 2.0));
    let t = CircleTriple::new(circles, tol).unwrap();

    let axes = k_radical_axes(&t, tol).unwrap();
    for (i, l) in axes.lines.iter().enumerate() {
        println!(
            "l{}: normal ({:.9}, {:.9}) offset {:.9}  dist(O) = {:.1e}",
            i + 1,
            l.normal().x,
            l.normal().y,
            l.offset(),
            point_line_distance(l, axes.o)
        );
    }
    println!("spread {:.1e}", axes.spread());

    for i in 0..3 {
        let k = *t.k_circle(i, tol).unwrap().as_circle().unwrap();
        let closed = circumcenter_power(&t, i, tol).unwrap();
        println!(
            "power of O w.r.t. K{}: closed form {closed:.9}, direct {:.9}",
            i + 1,
            power(&k, axes.o)
        );
    }
}
