use thiserror::Error;

/// Failures raised by the geometric operations.
///
/// Scene parsing has its own error type, see [`crate::scene::SceneError`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite coordinate or radius")]
    NonFinite,
    #[error("negative radius {0}")]
    NegativeRadius(f64),
    #[error("invalid tolerance: both components must be positive and finite")]
    InvalidTolerance,
    #[error("collinear input")]
    CollinearInput,
    #[error("identical circles")]
    IdenticalCircles,
    #[error("coincident points")]
    CoincidentPoints,
    #[error("concentric circles")]
    ConcentricCircles,
    #[error("ratio must be positive")]
    NonpositiveRatio,
    #[error("isosceles degenerate: |ab| = |ac|")]
    IsoscelesDegenerate,
    #[error("a lies on line bc")]
    CollinearAbc,
    #[error("triangle is not scalene")]
    NotScalene,
    #[error("degenerate triangle")]
    DegenerateTriangle,
    #[error("numerical degeneracy: {0}")]
    NumericalDegeneracy(&'static str),
    #[error("indeterminate ratio")]
    IndeterminateRatio,
    #[error("invalid ratio")]
    InvalidRatio,
    #[error("degenerate K{}: {reason}", .index + 1)]
    DegenerateK { index: usize, reason: KDegeneracy },
    #[error("centers not collinear (balance residual {residual:e})")]
    NotCollinear { residual: f64 },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("too few points for a fit")]
    TooFewPoints,
    #[error("points are collinear")]
    CollinearPoints,
    #[error("scan window too fine (more than 4096 cells per axis)")]
    WindowTooFine,
    #[error("invalid scan window")]
    InvalidWindow,
}

/// Why one of the three generalized Apollonius circles of a circle triple
/// is unusable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KDegeneracy {
    /// Equal powers: the locus is a line.
    EqualPowers,
    /// A zero power: the ratio is 0 or infinite, the center lies on a circle.
    ZeroPower,
    /// The locus is not a real circle (only reported where one is required).
    NotRealCircle,
}

impl std::fmt::Display for KDegeneracy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            KDegeneracy::EqualPowers => "equal powers, locus is a line",
            KDegeneracy::ZeroPower => "zero power, center lies on a circle",
            KDegeneracy::NotRealCircle => "locus is not a real circle",
        })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
