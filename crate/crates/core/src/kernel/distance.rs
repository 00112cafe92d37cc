use std::f64::consts::TAU;

use super::path::{ArcPath, ClosedArcSpline};
use super::point::Point2;
use crate::error::{GeomError, Result};

/// Nearest boundary point to a query.
#[derive(Debug, Clone, Copy)]
pub struct Nearest {
    pub dist: f64,
    /// Global arclength of the foot point.
    pub t: f64,
    pub foot: Point2,
}

impl ArcPath {
    /// Unsigned distance from `q` to the path with its foot point.
    pub fn nearest(&self, q: Point2) -> Nearest {
        let mut best = Nearest {
            dist: f64::INFINITY,
            t: 0.0,
            foot: self.start(),
        };
        for p in self.pieces() {
            let (d, s) = p.closest(q);
            if d < best.dist {
                best = Nearest {
                    dist: d,
                    t: p.t0 + s,
                    foot: p.point_at(s),
                };
            }
        }
        best.t = self.wrap_param(best.t);
        best
    }

    pub fn distance(&self, q: Point2) -> f64 {
        self.pieces()
            .iter()
            .map(|p| p.closest(q).0)
            .fold(f64::INFINITY, f64::min)
    }

    /// Winding number of the loop around `q` (q off the curve).
    pub fn winding_number(&self, q: Point2) -> i32 {
        let total: f64 = self.pieces().iter().map(|p| p.winding_angle(q)).sum();
        (total / TAU).round() as i32
    }
}

impl ClosedArcSpline {
    /// Interior test; errors when `q` lies on the curve.
    pub fn winding_contains(&self, q: Point2) -> Result<bool> {
        if self.distance(q) <= self.tol().tol_geom {
            return Err(GeomError::BoundaryPoint { x: q.x, y: q.y });
        }
        Ok(self.winding_number(q).abs() == 1)
    }

    /// Distance to the curve, positive inside and negative outside.
    pub fn signed_distance(&self, q: Point2) -> f64 {
        self.signed_nearest(q).0
    }

    /// Signed distance together with the nearest boundary point.
    pub fn signed_nearest(&self, q: Point2) -> (f64, Nearest) {
        let n = self.nearest(q);
        if n.dist <= self.tol().tol_geom {
            return (n.dist, n);
        }
        let inside = self.winding_number(q) != 0;
        (if inside { n.dist } else { -n.dist }, n)
    }
}
