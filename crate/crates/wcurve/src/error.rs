//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A (xp, yp) pair fed to a curvature formula is not a unit tangent.
    #[error("tangent ({xp}, {yp}) has speed {speed}, expected 1 within {tol:e}")]
    NonUnitTangent {
        xp: f64,
        yp: f64,
        speed: f64,
        tol: f64,
    },

    /// Parameter outside the admissible interval of a curve family.
    #[error("s = {s} outside the admissible domain ({lo}, {hi})")]
    OutOfDomain { s: f64, lo: f64, hi: f64 },

    /// Sample arrays are malformed (length mismatch, too short, s not increasing...).
    #[error("invalid curve samples: {0}")]
    InvalidSamples(&'static str),

    /// Finite-difference stencil asked for at a boundary index.
    #[error("index {index} has no interior stencil in {len} samples")]
    BoundaryIndex { index: usize, len: usize },

    /// Finite-difference estimator requires a uniform grid.
    #[error("sample spacing is not uniform (max relative gap deviation {max_rel:e})")]
    NonUniformSpacing { max_rel: f64 },

    /// Density rescaling degenerates at slope zero.
    #[error("density slope a = 0: the rescaling is undefined for the unweighted plane")]
    ZeroDensitySlope,

    /// Density exponent slope must be a finite real.
    #[error("density slope a = {a} is not finite")]
    NonFiniteDensitySlope { a: f64 },

    /// Symmetry identities are only defined for |c| < 1.
    #[error("symmetry identities require |c| < 1, got c = {c}")]
    SymmetryOutOfRange { c: f64 },

    /// Front reduction with a constant density exponent.
    #[error("constant density: equation reduces to zero Euclidean curvature (lines)")]
    ConstantDensity,

    /// Integration step must be positive and finite.
    #[error("integration step {step} must be positive and finite")]
    InvalidStep { step: f64 },

    /// Integration range must be finite and contain s = 0.
    #[error("integration range ({lo}, {hi}) must be finite and contain 0")]
    InvalidRange { lo: f64, hi: f64 },

    /// The curve never attains the trajectory's initial tangent direction.
    #[error("no parameter of the c = {c} curve matches the requested tangent angle")]
    NoTangentMatch { c: f64 },

    /// Trajectory and curve domains do not overlap after alignment.
    #[error("aligned trajectory does not overlap the curve domain")]
    EmptyOverlap,

    /// Endpoints with |dx| >= pi admit no connecting geodesic.
    #[error("|dx| = {dx} >= pi: no geodesic connects the points")]
    NotConnectable { dx: f64 },

    /// Geodesic endpoints coincide.
    #[error("geodesic endpoints coincide")]
    CoincidentPoints,

    /// A point with a non-finite coordinate.
    #[error("point ({x}, {y}) has a non-finite coordinate")]
    NonFinitePoint { x: f64, y: f64 },

    /// The shooting residual changed sign more than once; the connecting
    /// family lost monotonicity. Reported instead of silently picking a root.
    #[error("geodesic residual not monotone over the bracket ({sign_changes} sign changes)")]
    NonMonotoneResidual { sign_changes: usize },

    /// Rescaled-curvature operations require c > 1.
    #[error("rescaled curvature requires c > 1, got c = {c}")]
    CurvatureNotSupercritical { c: f64 },

    /// Dense sampling disagreed with the closed-form extremes of a sweep.
    #[error(
        "convergence sweep cross-check failed at c = {c}: sampled {sampled}, closed form {closed}"
    )]
    SweepCrossCheck { c: f64, sampled: f64, closed: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
