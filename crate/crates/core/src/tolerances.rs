//! Centralized tolerances. Quadrature accuracy is grid-dependent and is
//! chosen per call site; everything else lives here.

/// Exact-pipeline geometry tolerance (hull orientation, containment,
/// polygon arithmetic, closed-form identities).
pub const GEOM_EPS: f64 = 1e-9;

/// Unit-norm slack accepted for sphere-grid directions and query directions.
pub const UNIT_EPS: f64 = 1e-12;

/// Pairwise orthonormality slack for subspace bases.
pub const ORTHO_EPS: f64 = 1e-10;

/// Reduced-cost / pivot threshold for the dense simplex.
pub const SIMPLEX_EPS: f64 = 1e-9;

/// Identity-suite defect bound on the exact 2-D pipeline.
pub const DEFECT_EXACT: f64 = 1e-6;

/// Defect bound on LP-sampled paths (default `is_flower` tolerance,
/// projection identities, harmonic sums).
pub const DEFECT_SAMPLED: f64 = 1e-3;

/// Slack floor for discrete inequality verdicts. The weighted-sum forms of
/// Minkowski/Hölder hold exactly, so only rounding may go negative.
pub const SLACK_EPS: f64 = 1e-12;

/// Support/radial values at or above this magnitude are treated as infinite
/// when comparing extended-real samples. Unbounded polars of bodies whose
/// support vanishes only to rounding (e.g. a tilted segment) produce values
/// like 1e16 on one route and true `inf` on another.
pub const INF_CLIP: f64 = 1e9;
