//! Brute-force oracles: uniform boundary sampling and grid erosion.
//!
//! Sampling routines touch the curve only through point evaluation, so they
//! stay independent of the closed-form distance, winding and diameter code
//! they are used to check. The grid routines rely on `signed_distance` being
//! 1-Lipschitz: every truly feasible center lies within `h·√2/2` of a grid
//! point whose clearance is at least `r - h`.

use rayon::prelude::*;
use serde::Serialize;

use crate::kernel::{ArcPath, ClosedArcSpline, Point2};

/// Uniform arclength samples `t_i = i·L/n`.
pub fn samples(path: &ArcPath, n: usize) -> Vec<Point2> {
    let step = path.length() / n as f64;
    (0..n).map(|i| path.point_at(i as f64 * step)).collect()
}

/// Closed polyline length through `n` uniform samples. Never exceeds the true length.
pub fn brute_length(path: &ArcPath, n: usize) -> f64 {
    assert!(n >= 2, "brute_length needs at least two samples");
    let pts = samples(path, n);
    let mut total = 0.0;
    for i in 0..n {
        total += pts[i].dist(pts[(i + 1) % n]);
    }
    total
}

/// Largest pairwise distance among `n` uniform samples. A lower bound on the diameter.
pub fn brute_diameter(path: &ArcPath, n: usize) -> (f64, Point2, Point2) {
    assert!(n >= 2, "brute_diameter needs at least two samples");
    let pts = samples(path, n);
    let (d, i, j) = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut best = (0.0, i, i);
            for j in i + 1..n {
                let d = pts[i].dist(pts[j]);
                if d > best.0 {
                    best = (d, i, j);
                }
            }
            best
        })
        .reduce(
            || (0.0, 0, 0),
            |a, b| if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a },
        );
    (d, pts[i], pts[j])
}

/// Even-odd ray casting against a sampled polygon.
pub fn polygon_contains(poly: &[Point2], q: Point2) -> bool {
    let n = poly.len();
    let mut inside = false;
    let mut j = n - 1;
    for i in 0..n {
        let (a, b) = (poly[i], poly[j]);
        if (a.y > q.y) != (b.y > q.y) {
            let x = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if q.x < x {
                inside = !inside;
            }
        }
        j = i;
    }
    inside
}

/// Signed distance measured against `n` boundary samples only.
pub fn brute_signed_distance(poly: &[Point2], q: Point2) -> f64 {
    let d = poly
        .iter()
        .map(|p| p.dist(q))
        .fold(f64::INFINITY, f64::min);
    if polygon_contains(poly, q) {
        d
    } else {
        -d
    }
}

/// Incircle radius at `t` by bisection against boundary samples.
pub fn brute_incircle_radius(curve: &ClosedArcSpline, t: f64, n: usize) -> f64 {
    let poly = samples(curve.path(), n);
    let p = curve.point_at(t);
    let normal = curve.inward_normal(t);
    let tol = curve.tol();
    let feasible = |r: f64| brute_signed_distance(&poly, p + normal * r) >= r - tol.tol_geom;
    let mut lo = 0.0;
    let mut hi = curve.bbox_diagonal();
    while hi - lo > tol.tol_radius {
        let mid = 0.5 * (lo + hi);
        if feasible(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Axis-aligned grid of points at integer multiples of `h`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub lo: Point2,
    pub hi: Point2,
    pub h: f64,
}

impl GridSpec {
    /// Grid covering the curve's bounding box padded by `h`.
    pub fn for_curve(path: &ArcPath, h: f64) -> Self {
        assert!(h > 0.0, "grid step must be positive");
        let (lo, hi) = path.bbox();
        Self {
            lo: Point2::new(lo.x - h, lo.y - h),
            hi: Point2::new(hi.x + h, hi.y + h),
            h,
        }
    }

    fn index_range(lo: f64, hi: f64, h: f64) -> std::ops::RangeInclusive<i64> {
        ((lo / h).ceil() as i64)..=((hi / h).floor() as i64)
    }

    pub fn rows(&self) -> Vec<f64> {
        Self::index_range(self.lo.y, self.hi.y, self.h)
            .map(|j| j as f64 * self.h)
            .collect()
    }

    pub fn cols(&self) -> Vec<f64> {
        Self::index_range(self.lo.x, self.hi.x, self.h)
            .map(|i| i as f64 * self.h)
            .collect()
    }
}

/// Grid points with clearance at least `threshold`, row-major, with their clearance.
pub fn scan(curve: &ClosedArcSpline, grid: &GridSpec, threshold: f64) -> Vec<(Point2, f64)> {
    let cols = grid.cols();
    let rows = grid.rows();
    rows.par_iter()
        .map(|&y| {
            let mut out = Vec::new();
            for &x in &cols {
                let q = Point2::new(x, y);
                let d = curve.distance(q);
                if threshold > 0.0 && d < threshold {
                    continue;
                }
                let sd = curve.signed_distance(q);
                if sd >= threshold {
                    out.push((q, sd));
                }
            }
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Grid points whose disk of radius `r` fits inside the curve.
pub fn grid_feasible_centers(curve: &ClosedArcSpline, r: f64, grid: &GridSpec) -> Vec<Point2> {
    scan(curve, grid, r).into_iter().map(|(p, _)| p).collect()
}

/// Moves `c` onto the clearance-`r` set by Newton steps on the signed
/// distance. Returns `None` if no feasible point is reached.
pub fn project_to_clearance(curve: &ClosedArcSpline, c: Point2, r: f64) -> Option<Point2> {
    let tol = curve.tol().tol_geom;
    let mut c = c;
    for _ in 0..200 {
        let (sd, near) = curve.signed_nearest(c);
        if sd >= r - 0.5 * tol {
            return Some(c);
        }
        let away = c - near.foot;
        let grad = match away.normalized() {
            Some(u) if near.dist > tol => {
                if sd > 0.0 {
                    u
                } else {
                    -u
                }
            }
            _ => curve.inward_normal(near.t),
        };
        c += grad * (r - sd);
        if !c.is_finite() {
            return None;
        }
    }
    None
}

fn min_gap(pts: &[Point2]) -> f64 {
    let mut g = f64::INFINITY;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            g = g.min(pts[i].dist(pts[j]));
        }
    }
    g
}

fn own_gap(pts: &[Point2], i: usize, c: Point2) -> (f64, Option<usize>) {
    let mut best = (f64::INFINITY, None);
    for (j, p) in pts.iter().enumerate() {
        if j != i {
            let d = p.dist(c);
            if d < best.0 {
                best = (d, Some(j));
            }
        }
    }
    best
}

/// Local spreading of clearance-`r` centers: each center in turn tries a
/// step away from its nearest neighbour and along the four axes, followed by
/// projection onto the feasible set. A move is kept when it lengthens that
/// center's shortest link without shortening the overall shortest link.
/// Steps halve from `step0` until below a tenth of `tol_geom`.
pub fn refine_spread(curve: &ClosedArcSpline, pts: &mut [Point2], r: f64, step0: f64) {
    let k = pts.len();
    if k < 2 {
        return;
    }
    let floor = 0.1 * curve.tol().tol_geom;
    let mut step = step0;
    let axes = [
        Point2::new(1.0, 0.0),
        Point2::new(-1.0, 0.0),
        Point2::new(0.0, 1.0),
        Point2::new(0.0, -1.0),
    ];
    let mut rounds = 0;
    while step > floor && rounds < 20_000 {
        rounds += 1;
        let mut improved = false;
        for i in 0..k {
            let (own, nearest) = own_gap(pts, i, pts[i]);
            let global = min_gap(pts);
            let away = nearest.and_then(|j| (pts[i] - pts[j]).normalized());
            let mut push = Point2::ORIGIN;
            for (j, p) in pts.iter().enumerate() {
                if j != i {
                    if let Some(u) = (pts[i] - *p).normalized() {
                        push += u * (1.0 / pts[i].dist(*p).max(1e-12));
                    }
                }
            }
            let dirs = away
                .into_iter()
                .chain(push.normalized())
                .chain(axes.iter().copied());
            for dir in dirs {
                let Some(cand) = project_to_clearance(curve, pts[i] + dir * step, r) else {
                    continue;
                };
                let (new_own, _) = own_gap(pts, i, cand);
                if new_own <= own {
                    continue;
                }
                let old = pts[i];
                pts[i] = cand;
                if min_gap(pts) >= global {
                    improved = true;
                    break;
                }
                pts[i] = old;
            }
        }
        if !improved {
            step *= 0.5;
        }
    }
}

/// Convex hull (counterclockwise, no collinear points) by monotone chain.
pub fn convex_hull(points: &[Point2]) -> Vec<Point2> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: Point2, a: Point2, b: Point2| (a - o).cross(b - o);
    let mut hull: Vec<Point2> = Vec::with_capacity(2 * pts.len());
    for &p in &pts {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

/// Farthest pair in the feasible center set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FeasibleDiameter {
    /// Certified lower bound on the diameter of the clearance-`r` set.
    pub value: f64,
    pub witnesses: Option<(Point2, Point2)>,
}

/// Number of grid pairs handed to local refinement.
const REFINED_PAIRS: usize = 12;

/// Diameter of the set of centers with clearance at least `r`.
///
/// Seeds come from the grid at the relaxed clearance `r - h`; the longest
/// hull pairs are projected onto the exact clearance-`r` set and spread
/// apart by [`refine_spread`]. Only verified pairs are reported.
pub fn feasible_set_diameter(curve: &ClosedArcSpline, r: f64, grid: &GridSpec) -> FeasibleDiameter {
    let tol = curve.tol().tol_geom;
    let seeds: Vec<Point2> = scan(curve, grid, r - grid.h).into_iter().map(|(p, _)| p).collect();
    let empty = FeasibleDiameter {
        value: 0.0,
        witnesses: None,
    };
    if seeds.is_empty() {
        return empty;
    }
    let hull = convex_hull(&seeds);
    let mut pairs: Vec<(f64, usize, usize)> = Vec::new();
    for i in 0..hull.len() {
        for j in i..hull.len() {
            pairs.push((hull[i].dist(hull[j]), i, j));
        }
    }
    pairs.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    let step0 = 0.25 * curve.bbox_diagonal();
    let mut best: Option<(f64, Point2, Point2)> = None;
    for &(_, i, j) in pairs.iter().take(REFINED_PAIRS) {
        let (Some(a), Some(b)) = (
            project_to_clearance(curve, hull[i], r),
            project_to_clearance(curve, hull[j], r),
        ) else {
            continue;
        };
        let mut pts = [a, b];
        refine_spread(curve, &mut pts, r, step0);
        let ok = pts.iter().all(|&p| curve.signed_distance(p) >= r - tol);
        let d = pts[0].dist(pts[1]);
        if ok && best.is_none_or(|(bd, _, _)| d > bd) {
            best = Some((d, pts[0], pts[1]));
        }
    }
    if best.is_none() {
        best = seeds
            .iter()
            .find_map(|&s| project_to_clearance(curve, s, r))
            .filter(|&p| curve.signed_distance(p) >= r - tol)
            .map(|p| (0.0, p, p));
    }
    match best {
        Some((value, a, b)) => FeasibleDiameter {
            value,
            witnesses: Some((a, b)),
        },
        None => empty,
    }
}
