//! Classical Apollonius circles of a triangle and the points they share.

use apollonius::{bisector_feet, classic_apollonius, lemoine_data, power, Point, Tolerance};

fn main() {
    let tol = Tolerance::DEFAULT;
    let (a, b, c) = (
        Point::new(0.0, 3.0),
        Point::new(0.0, 0.0),
        Point::new(4.0, 0.0),
    );

    let k_a = classic_apollonius(a, b, c, tol).unwrap().circle().unwrap();
    println!(
        "K_A: center ({:.4}, {:.4}), radius {:.4}",
        k_a.center.x, k_a.center.y, k_a.radius
    );

    let (inner, outer) = bisector_feet(a, b, c, tol).unwrap();
    println!("bisector feet {inner:?} and {outer:?}");
    println!(
        "  powers w.r.t. K_A: {:.2e}, {:.2e}",
        power(&k_a, inner),
        power(&k_a, outer)
    );

    let d = lemoine_data(a, b, c, tol).unwrap();
    println!("circumcenter O = ({:.4}, {:.4})", d.o.x, d.o.y);
    println!(
        "  power of O w.r.t. K_A = {:.6}, |AO|^2 = {:.6}",
        power(&k_a, d.o),
        a.dist2(d.o)
    );
    println!("isodynamic points S1 = {:?}, S2 = {:?}", d.s1, d.s2);
    println!(
        "centers M_A = {:?}, M_B = {:?}, M_C = {:?}",
        d.m_a, d.m_b, d.m_c
    );
    println!(
        "Lemoine line: normal {:?}, offset {:.6}",
        d.lemoine.normal(),
        d.lemoine.offset()
    );
}
