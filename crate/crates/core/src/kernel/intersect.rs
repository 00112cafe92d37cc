//! Closed-form self-intersection tests between placed segments.

use super::path::ArcPath;
use super::piece::{Piece, Shape};
use super::point::Point2;

fn on_both(a: &Piece, b: &Piece, q: Point2, slack: f64) -> bool {
    a.locate(q, slack).is_some() && b.locate(q, slack).is_some()
}

fn endpoints(a: &Piece, b: &Piece) -> [Point2; 4] {
    [a.p0, a.p1, b.p0, b.p1]
}

fn circle_circle(c1: Point2, r1: f64, c2: Point2, r2: f64, slack: f64) -> Vec<Point2> {
    let d = c1.dist(c2);
    if d <= slack || d > r1 + r2 + slack || d < (r1 - r2).abs() - slack {
        return Vec::new();
    }
    let e = (c2 - c1) * (1.0 / d);
    let a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    let h = (r1 * r1 - a * a).max(0.0).sqrt();
    let base = c1 + e * a;
    if h <= slack {
        vec![base]
    } else {
        vec![base + e.perp() * h, base - e.perp() * h]
    }
}

fn line_circle(p: Point2, u: Point2, c: Point2, r: f64, slack: f64) -> Vec<Point2> {
    let s = (c - p).dot(u);
    let foot = p + u * s;
    let dist = c.dist(foot);
    if dist > r + slack {
        return Vec::new();
    }
    let hh = (r * r - dist * dist).max(0.0).sqrt();
    if hh <= slack {
        vec![foot]
    } else {
        vec![foot + u * hh, foot - u * hh]
    }
}

fn same_circle(a: &Piece, b: &Piece, slack: f64) -> bool {
    match (a.circle(), b.circle()) {
        (Some((c1, r1)), Some((c2, r2))) => c1.dist(c2) <= slack && (r1 - r2).abs() <= slack,
        _ => false,
    }
}

fn collinear(a: &Piece, b: &Piece, slack: f64) -> bool {
    match (a.shape, b.shape) {
        (Shape::Line { dir: u1 }, Shape::Line { dir: u2 }) => {
            u1.cross(u2).abs() <= 1e-12 && (b.p0 - a.p0).cross(u1).abs() <= slack
        }
        _ => false,
    }
}

/// Intersection points of two non-adjacent pieces.
pub(crate) fn general(a: &Piece, b: &Piece, slack: f64) -> Vec<Point2> {
    if same_circle(a, b, slack) || collinear(a, b, slack) {
        return endpoints(a, b)
            .into_iter()
            .filter(|&q| on_both(a, b, q, slack))
            .collect();
    }
    let cands = match (a.shape, b.shape) {
        (Shape::Line { dir: u1 }, Shape::Line { dir: u2 }) => {
            let cr = u1.cross(u2);
            if cr.abs() <= 1e-12 {
                Vec::new()
            } else {
                let t = (b.p0 - a.p0).cross(u2) / cr;
                vec![a.p0 + u1 * t]
            }
        }
        (Shape::Line { dir }, Shape::Arc { center, radius, .. }) => {
            line_circle(a.p0, dir, center, radius, slack)
        }
        (Shape::Arc { center, radius, .. }, Shape::Line { dir }) => {
            line_circle(b.p0, dir, center, radius, slack)
        }
        (
            Shape::Arc {
                center: c1,
                radius: r1,
                ..
            },
            Shape::Arc {
                center: c2,
                radius: r2,
                ..
            },
        ) => circle_circle(c1, r1, c2, r2, slack),
    };
    cands
        .into_iter()
        .filter(|&q| on_both(a, b, q, slack))
        .collect()
}

/// Intersections of two pieces sharing the junction points `joints`, other
/// than those junctions. Both supporting curves pass through a junction, so
/// the second intersection is found by reflection, which stays well
/// conditioned when the pieces are tangent there.
pub(crate) fn adjacent(a: &Piece, b: &Piece, joints: &[Point2], slack: f64, joint_radius: f64) -> Vec<Point2> {
    let away = |q: &Point2| joints.iter().all(|j| q.dist(*j) > joint_radius);
    if same_circle(a, b, slack) || collinear(a, b, slack) {
        return endpoints(a, b)
            .into_iter()
            .filter(|q| away(q) && on_both(a, b, *q, slack))
            .collect();
    }
    let mut out = Vec::new();
    for &j in joints {
        let cand = match (a.shape, b.shape) {
            (Shape::Line { .. }, Shape::Line { .. }) => None,
            (Shape::Line { dir }, Shape::Arc { center, .. })
            | (Shape::Arc { center, .. }, Shape::Line { dir }) => {
                let s = -2.0 * dir.dot(j - center);
                Some(j + dir * s)
            }
            (Shape::Arc { center: c1, .. }, Shape::Arc { center: c2, .. }) => {
                let e = (c2 - c1).normalized();
                e.map(|e| {
                    let v = j - c1;
                    c1 + e * (2.0 * e.dot(v)) - v
                })
            }
        };
        if let Some(q) = cand {
            if away(&q) && on_both(a, b, q, slack) {
                out.push(q);
            }
        }
    }
    out
}

/// Junction points shared by pieces `i < j` along a closed loop.
fn joints(path: &ArcPath, i: usize, j: usize) -> Vec<Point2> {
    let pieces = path.pieces();
    let n = pieces.len();
    let mut out = Vec::new();
    if j == i + 1 {
        out.push(pieces[j].p0);
    }
    if i == 0 && j == n - 1 && n > 1 {
        out.push(pieces[0].p0);
    }
    out
}

fn pair_hits(path: &ArcPath, i: usize, j: usize, slack: f64, joint_radius: f64) -> bool {
    let pieces = path.pieces();
    let js = joints(path, i, j);
    if js.is_empty() {
        !general(&pieces[i], &pieces[j], slack).is_empty()
    } else {
        !adjacent(&pieces[i], &pieces[j], &js, slack, joint_radius).is_empty()
    }
}

fn joint_radius(path: &ArcPath, slack: f64) -> f64 {
    let (gap, _) = path.closure_gap();
    (100.0 * slack).max(10.0 * gap)
}

/// First pair of segments that meet other than at their shared junction.
pub(crate) fn first_crossing(path: &ArcPath, slack: f64) -> Option<(usize, usize)> {
    let n = path.pieces().len();
    let jr = joint_radius(path, slack);
    for i in 0..n {
        for j in i + 1..n {
            if pair_hits(path, i, j, slack, jr) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Number of segment pairs that meet improperly. The first and last
/// segments are treated as joined at the start point even if the path is
/// not exactly closed.
pub fn crossing_count(path: &ArcPath, slack: f64) -> usize {
    let n = path.pieces().len();
    let jr = joint_radius(path, slack);
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            if pair_hits(path, i, j, slack, jr) {
                count += 1;
            }
        }
    }
    count
}
