//! Closed-form geometry of a single placed segment.

use std::f64::consts::{PI, TAU};

use super::point::{wrap_tau, Point2};
use super::segment::advance;

#[derive(Debug, Clone, Copy)]
pub(crate) enum Shape {
    Line { dir: Point2 },
    Arc { center: Point2, radius: f64, a0: f64 },
}

/// A segment placed in the plane: its start point, heading and global
/// arclength offset along the curve.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Piece {
    pub p0: Point2,
    pub p1: Point2,
    pub h0: f64,
    pub kappa: f64,
    pub len: f64,
    pub t0: f64,
    pub shape: Shape,
}

impl Piece {
    pub fn new(p0: Point2, h0: f64, kappa: f64, len: f64, t0: f64) -> Self {
        let (p1, _) = advance(p0, h0, kappa, len);
        let shape = if kappa == 0.0 {
            Shape::Line {
                dir: Point2::from_angle(h0),
            }
        } else {
            let center = p0 + Point2::from_angle(h0).perp() * (1.0 / kappa);
            Shape::Arc {
                center,
                radius: 1.0 / kappa.abs(),
                a0: (p0 - center).angle(),
            }
        };
        Self {
            p0,
            p1,
            h0,
            kappa,
            len,
            t0,
            shape,
        }
    }

    pub fn point_at(&self, s: f64) -> Point2 {
        advance(self.p0, self.h0, self.kappa, s).0
    }

    pub fn heading_at(&self, s: f64) -> f64 {
        self.h0 + self.kappa * s
    }

    pub fn h1(&self) -> f64 {
        self.heading_at(self.len)
    }

    pub fn circle(&self) -> Option<(Point2, f64)> {
        match self.shape {
            Shape::Arc { center, radius, .. } => Some((center, radius)),
            Shape::Line { .. } => None,
        }
    }

    /// Arclength (in `[0, 2πR)`) from the arc start to the circle point in
    /// direction `angle` from the center, following the arc's orientation.
    fn arc_param_of_angle(&self, angle: f64, a0: f64, radius: f64) -> f64 {
        let rel = if self.kappa > 0.0 { angle - a0 } else { a0 - angle };
        wrap_tau(rel) * radius
    }

    /// Local arclength of the circle/line point nearest to the direction of `q`.
    /// For arcs the value may exceed `len` (point on the supporting circle only).
    pub fn param_of(&self, q: Point2) -> f64 {
        match self.shape {
            Shape::Line { dir } => (q - self.p0).dot(dir),
            Shape::Arc { center, radius, a0 } => {
                self.arc_param_of_angle((q - center).angle(), a0, radius)
            }
        }
    }

    /// Whether the local arclength `s` (possibly wrapped, for arcs) lies on the piece.
    fn param_on(&self, s: f64, slack: f64) -> bool {
        match self.shape {
            Shape::Line { .. } => s >= -slack && s <= self.len + slack,
            Shape::Arc { radius, .. } => {
                s <= self.len + slack || s >= TAU * radius - slack
            }
        }
    }

    /// Local arclength of `q` if `q` lies on the piece within `slack`.
    pub fn locate(&self, q: Point2, slack: f64) -> Option<f64> {
        match self.shape {
            Shape::Line { dir } => {
                let s = (q - self.p0).dot(dir);
                let off = (q - self.p0).cross(dir).abs();
                (off <= slack && self.param_on(s, slack)).then(|| s.clamp(0.0, self.len))
            }
            Shape::Arc { center, radius, a0 } => {
                if (q.dist(center) - radius).abs() > slack {
                    return None;
                }
                let s = self.arc_param_of_angle((q - center).angle(), a0, radius);
                if s <= self.len + slack {
                    Some(s.min(self.len))
                } else if s >= TAU * radius - slack {
                    Some(0.0)
                } else {
                    None
                }
            }
        }
    }

    /// Nearest point: (distance, local arclength).
    pub fn closest(&self, q: Point2) -> (f64, f64) {
        match self.shape {
            Shape::Line { dir } => {
                let s = (q - self.p0).dot(dir).clamp(0.0, self.len);
                (q.dist(self.p0 + dir * s), s)
            }
            Shape::Arc { center, radius, a0 } => {
                let d = q.dist(center);
                if d == 0.0 {
                    return (radius, 0.0);
                }
                let s = self.arc_param_of_angle((q - center).angle(), a0, radius);
                if s <= self.len {
                    ((d - radius).abs(), s)
                } else {
                    let d0 = q.dist(self.p0);
                    let d1 = q.dist(self.p1);
                    if d0 <= d1 {
                        (d0, 0.0)
                    } else {
                        (d1, self.len)
                    }
                }
            }
        }
    }

    /// Farthest point: (distance, local arclength).
    pub fn farthest(&self, q: Point2) -> (f64, f64) {
        let d0 = q.dist(self.p0);
        let d1 = q.dist(self.p1);
        let ends = if d0 >= d1 { (d0, 0.0) } else { (d1, self.len) };
        match self.shape {
            Shape::Line { .. } => ends,
            Shape::Arc { center, radius, a0 } => {
                let d = q.dist(center);
                if d == 0.0 {
                    return (radius, 0.0);
                }
                let s = self.arc_param_of_angle((center - q).angle(), a0, radius);
                if s <= self.len && d + radius > ends.0 {
                    (d + radius, s)
                } else {
                    ends
                }
            }
        }
    }

    /// Signed angle swept by the piece as seen from `q` (q not on the piece).
    pub fn winding_angle(&self, q: Point2) -> f64 {
        winding_angle(self.p0, self.h0, self.kappa, self.len, q, 0)
    }

    /// Axis-aligned bounds.
    pub fn bbox(&self) -> (Point2, Point2) {
        let mut lo = Point2::new(self.p0.x.min(self.p1.x), self.p0.y.min(self.p1.y));
        let mut hi = Point2::new(self.p0.x.max(self.p1.x), self.p0.y.max(self.p1.y));
        if let Shape::Arc { center, radius, a0 } = self.shape {
            for k in 0..4 {
                let ang = k as f64 * PI / 2.0;
                if self.arc_param_of_angle(ang, a0, radius) <= self.len {
                    let p = center + Point2::from_angle(ang) * radius;
                    lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
                    hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
                }
            }
        }
        (lo, hi)
    }

    /// Angular interval `[start, start + width]` (counterclockwise) covered by an arc.
    pub fn angular_interval(&self) -> Option<(f64, f64)> {
        match self.shape {
            Shape::Arc { a0, .. } => {
                let sweep = self.kappa.abs() * self.len;
                if self.kappa > 0.0 {
                    Some((wrap_tau(a0), sweep))
                } else {
                    Some((wrap_tau(a0 - sweep), sweep))
                }
            }
            Shape::Line { .. } => None,
        }
    }

    /// Local arclength of the arc point at the given center angle, if on the arc.
    pub fn param_at_angle(&self, angle: f64) -> Option<f64> {
        match self.shape {
            Shape::Arc { a0, radius, .. } => {
                let s = self.arc_param_of_angle(angle, a0, radius);
                (s <= self.len).then_some(s)
            }
            Shape::Line { .. } => None,
        }
    }
}

fn chord_angle(a: Point2, b: Point2) -> f64 {
    a.cross(b).atan2(a.dot(b))
}

/// Angle swept by a constant-curvature piece around `q`.
///
/// The arc sweep equals the chord sweep plus a full turn when `q` sits in
/// the circular segment between arc and chord. Points on the chord line make
/// the chord sweep ambiguous, so the arc is split in that case.
fn winding_angle(p0: Point2, h0: f64, kappa: f64, len: f64, q: Point2, depth: u32) -> f64 {
    let (p1, _) = advance(p0, h0, kappa, len);
    let a = p0 - q;
    let b = p1 - q;
    if kappa == 0.0 {
        return chord_angle(a, b);
    }
    let chord = p1 - p0;
    let side_q = chord.cross(q - p0);
    let scale = chord.norm().max(1e-300);
    if side_q.abs() <= 1e-12 * scale * scale && depth < 8 {
        let (pm, hm) = advance(p0, h0, kappa, 0.5 * len);
        return winding_angle(p0, h0, kappa, 0.5 * len, q, depth + 1)
            + winding_angle(pm, hm, kappa, 0.5 * len, q, depth + 1);
    }
    let radius = 1.0 / kappa.abs();
    let center = p0 + Point2::from_angle(h0).perp() * (1.0 / kappa);
    let mid = advance(p0, h0, kappa, 0.5 * len).0;
    let side_mid = chord.cross(mid - p0);
    let base = chord_angle(a, b);
    if q.dist(center) < radius && side_mid * side_q > 0.0 {
        base + TAU * kappa.signum()
    } else {
        base
    }
}
