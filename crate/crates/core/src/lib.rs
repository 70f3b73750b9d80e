//! Scan conversion of axis-aligned, origin-centered ellipses on a lattice
//! of configurable width `h`, the generalization of the classical
//! unit-pixel midpoint stepping scheme.
//!
//! The pipeline has three stages:
//!
//! 1. **kernel** – the implicit function `b²x² + a²y² - a²b²`, the two
//!    incremental decision-parameter recurrences (one per quadrant
//!    region), and the region transition test `2b²x > 2a²y`.
//! 2. **trace** – the loop that walks the first quadrant, records every
//!    decision as a table row, and reflects the staircase into all four
//!    quadrants.
//! 3. **analysis** – an independent geometric yardstick (nearest point on
//!    the exact curve) plus the algebraic residual, aggregated per walk so
//!    that grids of different widths can be compared.
//!
//! Everything runs in one of two arithmetic modes: `f64`, or exact big
//! rationals for digit-for-digit table verification (see
//! [`scalar::GridScalar`]). All values are immutable once built and safe
//! to share across threads.

pub mod analysis;
pub mod ellipse;
pub mod kernel;
pub mod scalar;
pub mod trace;

pub use analysis::{
    compare_steps, compare_steps_with, error_report, nearest_ellipse_distance, point_error,
    ErrorReport, PointError,
};
pub use ellipse::{DecisionState, EllipseSpec, GeometryError, GridPoint, GridStep, Region};
pub use kernel::{
    decision_midpoint, eval_implicit, initial_p1, initial_p2, region_transition, step_r1, step_r2,
};
pub use scalar::{DecimalParseError, GridScalar};
pub use trace::{
    reflect_four_quadrants, trace_quadrant, trace_quadrant_with, DuplicatePolicy, EllipsePointSet,
    QuadrantTrace, R2SeedRule, TraceOptions, TraceStep,
};
