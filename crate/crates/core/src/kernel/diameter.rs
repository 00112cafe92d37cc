//! Farthest pair of boundary points from closed-form candidates.
//!
//! The maximum distance between two constant-curvature pieces is attained
//! either at an endpoint of one of them (paired with that point's farthest
//! point on the other piece) or at two arc-interior points on the line
//! through both centers; concentric arcs are handled through antipodal
//! angles.

use std::f64::consts::PI;

use serde::Serialize;

use super::path::ArcPath;
use super::piece::Piece;
use super::point::{wrap_tau, Point2};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Diameter {
    pub value: f64,
    pub p1: Point2,
    pub p2: Point2,
    pub t1: f64,
    pub t2: f64,
}

#[derive(Clone, Copy)]
struct Cand {
    d: f64,
    t1: f64,
    t2: f64,
}

/// `Some(angle)` in the intersection of two counterclockwise angular intervals.
fn cyclic_overlap(a0: f64, aw: f64, b0: f64, bw: f64) -> Option<f64> {
    if wrap_tau(b0 - a0) <= aw {
        Some(b0)
    } else if wrap_tau(a0 - b0) <= bw {
        Some(a0)
    } else {
        None
    }
}

fn arc_pair(a: &Piece, b: &Piece, out: &mut Vec<Cand>, slack: f64) {
    let (Some((c1, _)), Some((c2, _))) = (a.circle(), b.circle()) else {
        return;
    };
    let d = c1.dist(c2);
    if d <= slack {
        let (Some((a0, aw)), Some((b0, bw))) = (a.angular_interval(), b.angular_interval()) else {
            return;
        };
        if let Some(th) = cyclic_overlap(a0, aw, wrap_tau(b0 + PI), bw) {
            let sa = a.param_at_angle(th).unwrap_or_else(|| nearest_end(a, th));
            let sb = b
                .param_at_angle(th + PI)
                .unwrap_or_else(|| nearest_end(b, th + PI));
            let pa = a.point_at(sa);
            let pb = b.point_at(sb);
            out.push(Cand {
                d: pa.dist(pb),
                t1: a.t0 + sa,
                t2: b.t0 + sb,
            });
        }
        return;
    }
    let e = (c2 - c1) * (1.0 / d);
    for s1 in [-1.0, 1.0] {
        for s2 in [-1.0, 1.0] {
            let th1 = (e * s1).angle();
            let th2 = (e * s2).angle();
            if let (Some(sa), Some(sb)) = (a.param_at_angle(th1), b.param_at_angle(th2)) {
                let pa = a.point_at(sa);
                let pb = b.point_at(sb);
                out.push(Cand {
                    d: pa.dist(pb),
                    t1: a.t0 + sa,
                    t2: b.t0 + sb,
                });
            }
        }
    }
}

fn nearest_end(p: &Piece, angle: f64) -> f64 {
    let (c, r) = p.circle().expect("arc piece");
    let s = p.param_of(c + Point2::from_angle(angle) * r);
    let full = std::f64::consts::TAU * r;
    if full - s < s - p.len {
        0.0
    } else {
        p.len
    }
}

/// Diameter of the path's point set. Among pairs within `tie_slack` of the
/// maximum, the one with lexicographically smallest parameters wins.
pub fn diameter(path: &ArcPath, tie_slack: f64) -> Diameter {
    let pieces = path.pieces();
    let mut cands = Vec::new();
    let knots: Vec<(Point2, f64)> = pieces.iter().map(|p| (p.p0, p.t0)).collect();
    for (i, &(pi, ti)) in knots.iter().enumerate() {
        for &(pj, tj) in &knots[i..] {
            cands.push(Cand {
                d: pi.dist(pj),
                t1: ti,
                t2: tj,
            });
        }
        for piece in pieces {
            let (d, s) = piece.farthest(pi);
            cands.push(Cand {
                d,
                t1: ti,
                t2: piece.t0 + s,
            });
        }
    }
    for (i, a) in pieces.iter().enumerate() {
        for b in &pieces[i..] {
            arc_pair(a, b, &mut cands, 1e-12);
        }
    }
    let best = cands.iter().map(|c| c.d).fold(0.0, f64::max);
    let normalize = |c: &Cand| {
        let a = path.wrap_param(c.t1);
        let b = path.wrap_param(c.t2);
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    };
    let (t1, t2) = cands
        .iter()
        .filter(|c| c.d >= best - tie_slack)
        .map(normalize)
        .min_by(|x, y| x.partial_cmp(y).expect("finite parameters"))
        .unwrap_or((0.0, 0.0));
    Diameter {
        value: best,
        p1: path.point_at(t1),
        p2: path.point_at(t2),
        t1,
        t2,
    }
}
