//! Plane curves built from circular arcs and line segments, with the
//! machinery needed to study closed curves of curvature at most one:
//! incircles, supporting osculating circles, disjoint unit-disk fitting,
//! a gallery of extremal curves, and a derivative-free search harness.
//!
//! Curves are [`ClosedArcSpline`]s: a start point, a start heading, and a
//! list of constant-curvature [`Segment`]s. Every query is answered in
//! closed form per segment; the [`oracle`] module holds the brute-force
//! sampling and grid routines used to cross-check those answers.

pub mod error;
pub mod gallery;
pub mod kernel;
pub mod moons;
pub mod oracle;
pub mod search;
pub mod svg;
pub mod tol;

pub use error::{GeomError, Result};
pub use kernel::{
    ArcPath, ArcSpan, Circle, ClosedArcSpline, CurveJson, CurveReport, Point2, Segment,
};

pub use moons::{FitWitness, Incircle};
pub use tol::ToleranceConfig;
