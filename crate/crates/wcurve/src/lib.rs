//! Constant weighted-curvature curves in the plane with a log-linear density.
//!
//! The plane carries the density `e^{a*y}` (canonically `a = 1`), which
//! weights both length and area. A unit-speed curve has weighted curvature
//! `k_f = x'y'' - x''y' - a*x'`; the curves with `k_f` constant are exactly
//! the profiles of traveling curved fronts of curvature flow with a constant
//! forcing term, and the zero set contains the translating soliton of curve
//! shortening flow.
//!
//! The crate provides:
//!
//! * [`geom`] — curvature and weighted-length functionals on sampled and
//!   analytic curves, finite-difference estimators, and the density
//!   rescaling transform;
//! * [`families`] — closed-form evaluators for every constant-curvature
//!   branch, the line solutions, the mirror identities, and the reduction
//!   of forced traveling fronts to the canonical density;
//! * [`oracle`] — an independent fixed-step RK4 integration of the
//!   tangent-angle equation, with alignment and deviation measurement
//!   against the closed forms;
//! * [`geodesic`] — connectability, shooting, and weighted length of
//!   geodesics under `e^y`;
//! * [`convergence`] — the rescaled-curvature study of the supercritical
//!   family as the curvature constant grows.
//!
//! Everything is pure and `Send + Sync`; curves are immutable values.

pub mod convergence;
pub mod error;
pub mod families;
pub mod geodesic;
pub mod geom;
pub mod oracle;

pub use convergence::{
    convergence_sweep, rescaled_curvature, rescaled_curvature_closed_form, RescaleReport,
};
pub use error::{Error, Result};
pub use families::{
    front_reduction, lines_for, symmetry_check, Branch, ClassifiedCurve, Derivatives, FrontProfile,
    FrontReduction, LineSolution,
};
pub use geodesic::{
    connect, connectable, path_weighted_length, reaper_point, GeodesicKind, GeodesicSolution,
};
pub use geom::{
    density_rescale, euclidean_curvature, weighted_curvature, weighted_curvature_a,
    weighted_curvature_fd, weighted_length, CurveSamples, DensityParams, DerivativeColumns, Point2,
};
pub use oracle::{
    align, canonical_xi0, integrate_xi, max_deviation, max_ode_residual, trajectory_from_curve,
    Alignment, OdeTrajectory,
};
