//! Collinearity of the three generalized Apollonius centers.

use apollonius::{
    generalized_centers, lemoine_line_generalized, Circle, CircleTriple, Point, Tolerance,
};

fn triple(radii: [f64; 3]) -> CircleTriple {
    let centers = [
        Point::new(0.0, 0.0),
        Point::new(5.0, 0.0),
        Point::new(1.0, 4.0),
    ];
    let circles = [0, 1, 2].map(|i| Circle::new(centers[i], radii[i]));
    CircleTriple::new(circles, Tolerance::DEFAULT).unwrap()
}

fn main() {
    let tol = Tolerance::DEFAULT;
    for radii in [[0.0, 0.0, 0.0], [2.0, 2.0, 2.0], [1.0, 2.0, 3.0]] {
        let t = triple(radii);
        let r = generalized_centers(&t, tol).unwrap();
        println!("radii {radii:?}");
        for (i, m) in r.m.iter().enumerate() {
            println!("  M{} = ({:.6}, {:.6})", i + 1, m.x, m.y);
        }
        println!("  Menelaus product {:.6}", r.menelaus);
        println!("  balance {:.3} vs {:.3}", r.balance_lhs, r.balance_rhs);
        match lemoine_line_generalized(&t, tol) {
            Ok(l) => println!("  line: normal {:?}, offset {:.6}", l.normal(), l.offset()),
            Err(e) => println!("  {e}"),
        }
    }
}
