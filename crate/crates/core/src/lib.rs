//! Generalized Apollonius circles.
//!
//! For two circles `G1`, `G2` and a real ratio `k`, the points whose powers
//! satisfy `P1(X) = k P2(X)` form a circle, a line, a single point, or nothing.
//! This crate computes that locus together with its full degeneracy
//! classification, the classical triangle constructions it generalizes, and
//! the three-circle collinearity and radical-axis theorems built on it. A
//! brute-force grid scanner provides an independent check of every locus.
//!
//! ```
//! use apollonius::{generalized_locus, Circle, Locus, Point, PowerRatio, Tolerance};
//!
//! let g1 = Circle::new(Point::new(0.0, 0.0), 1.0);
//! let g2 = Circle::new(Point::new(3.0, 0.0), 1.0);
//! let k = PowerRatio::finite(2.0).unwrap();
//! match generalized_locus(&g1, &g2, k, Tolerance::DEFAULT).unwrap() {
//!     Locus::RealCircle(c) => assert!((c.radius - 19f64.sqrt()).abs() < 1e-12),
//!     other => panic!("unexpected {other:?}"),
//! }
//! ```

pub mod classic;
pub mod error;
pub mod general;
pub mod geom;
pub mod oracle;
pub mod power;
pub mod scene;
pub mod selftest;
pub mod triple;

pub use classic::{
    bisector_feet, classic_apollonius, classic_ratio_locus, lemoine_data, ClassicApollonius,
    LemoineData,
};
pub use error::{Error, KDegeneracy, Result};
pub use general::{
    apollonius_of_point, classify, generalized_locus, k_thresholds, power_ratio_of_point,
    KThresholds, Locus, LocusKind, PowerRatio,
};
pub use geom::{
    circle_intersection, circumcircle, collinear, line_through, point_line_distance, Circle, Line,
    Point, Tolerance,
};
pub use power::{power, radical_axis};
pub use triple::{
    circumcenter_power, collinearity_balance, generalized_centers, k_radical_axes,
    lemoine_line_generalized, menelaus_product, CircleTriple, RadicalAxes, TripleReport,
};
