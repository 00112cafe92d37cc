use std::f64::consts::TAU;

use crate::kernel::{ArcPath, Point2, Segment};

/// Closes a loop exactly by adjusting radii and line lengths.
///
/// With the turning angles fixed (and summing to 2π) every heading is fixed,
/// so the end point is linear in the arc radii and line lengths. The
/// smallest correction in the least-squares sense is taken, and variables
/// that would drop below their lower bound are pinned there and the rest
/// re-solved.
pub(crate) fn close_by_scales(heading: f64, turns: &[f64], scales: &[f64], lower: &[f64]) -> Option<Vec<f64>> {
    let n = turns.len();
    let mut cols = Vec::with_capacity(n);
    let mut h = heading;
    for &th in turns {
        let col = if th == 0.0 {
            Point2::from_angle(h)
        } else {
            Point2::from_angle(h + 0.5 * th) * (2.0 * (0.5 * th.abs()).sin())
        };
        cols.push(col);
        h += th;
    }
    let mut x = scales.to_vec();
    let mut free: Vec<bool> = vec![true; n];
    for _ in 0..=n {
        let resid = cols.iter().zip(&x).fold(Point2::ORIGIN, |acc, (c, &v)| acc + *c * v);
        let (mut a, mut b, mut d) = (0.0, 0.0, 0.0);
        for (c, _) in cols.iter().zip(&free).filter(|(_, &f)| f) {
            a += c.x * c.x;
            b += c.x * c.y;
            d += c.y * c.y;
        }
        let det = a * d - b * b;
        if det.abs() < 1e-12 * (a * d).max(1e-300) || det == 0.0 {
            return None;
        }
        let lx = (-resid.x * d + resid.y * b) / det;
        let ly = (resid.x * b - resid.y * a) / det;
        let mut violated = false;
        let mut trial = x.clone();
        for i in 0..n {
            if free[i] {
                trial[i] += cols[i].x * lx + cols[i].y * ly;
                if trial[i] < lower[i] {
                    violated = true;
                }
            }
        }
        if !violated {
            return Some(trial);
        }
        for i in 0..n {
            if free[i] && trial[i] < lower[i] {
                free[i] = false;
                x[i] = lower[i];
            }
        }
    }
    None
}

/// Minimum radius of a repaired arc and minimum length of a repaired line.
pub(crate) const MIN_RADIUS: f64 = 1.0;
pub(crate) const MIN_LINE: f64 = 0.05;

/// Closes an open path: turning angles are rescaled to sum to 2π, then the
/// radii and line lengths are corrected by [`close_by_scales`]. Arcs keep
/// radius at least one.
pub(crate) fn repair_path(path: &ArcPath) -> Option<ArcPath> {
    let segs = path.segments();
    let total: f64 = segs.iter().map(Segment::turning).sum();
    if !(total > 0.0) {
        return None;
    }
    let f = TAU / total;
    let turns: Vec<f64> = segs.iter().map(|s| s.turning() * f).collect();
    if turns.iter().any(|t| t.abs() >= TAU) {
        return None;
    }
    let scales: Vec<f64> = segs
        .iter()
        .map(|s| if s.is_line() { s.len } else { 1.0 / s.kappa.abs() })
        .collect();
    let lower: Vec<f64> = segs
        .iter()
        .map(|s| if s.is_line() { MIN_LINE } else { MIN_RADIUS })
        .collect();
    let x = close_by_scales(path.heading(), &turns, &scales, &lower)?;
    let out: Option<Vec<Segment>> = turns
        .iter()
        .zip(&x)
        .map(|(&th, &v)| {
            if th == 0.0 {
                Segment::line(v).ok()
            } else {
                Segment::arc(v, th).ok()
            }
        })
        .collect();
    ArcPath::new(path.start(), path.heading(), out?).ok()
}
