//! Arc-spline curves and their closed-form primitives.

mod diameter;
mod distance;
pub(crate) mod intersect;
pub(crate) mod piece;
mod path;
mod point;
mod report;
mod segment;

pub use diameter::{diameter, Diameter};
pub use distance::Nearest;
pub use intersect::crossing_count;
pub use path::{ArcPath, ArcSpan, ClosedArcSpline, CurveJson};
pub use point::{wrap_pi, wrap_tau, Circle, Point2};
pub use report::{is_simple, report, CurveReport};
pub use segment::{advance, Segment};
pub(crate) use segment::sinc;

impl ClosedArcSpline {
    pub fn diameter(&self) -> Diameter {
        diameter(self.path(), self.tol().tol_geom)
    }

    pub fn report(&self) -> CurveReport {
        report(self.path(), self.tol())
    }
}
