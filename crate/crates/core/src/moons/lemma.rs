use serde::Serialize;

use super::incircle::{incircle_at, supports_with_slack, Incircle, Support};
use crate::error::{GeomError, Result};
use crate::kernel::{ArcSpan, Circle, ClosedArcSpline, Point2};

/// Outcome of [`lemma_supporting_point`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaRun {
    pub q: f64,
    pub osculating: Circle,
    pub iterations: usize,
    /// Span length before each round, starting with the input span.
    pub span_lengths: Vec<f64>,
    /// The span shrank below `eps_arc` and support was accepted at the
    /// relaxed tolerance.
    pub degenerate: bool,
    /// The base incircle runs along a whole segment, whose midpoint was
    /// returned directly.
    pub dense_base: bool,
}

const MAX_ROUNDS: usize = 4096;

/// Spans between cyclically consecutive contacts of an incircle.
pub fn spans_between_contacts(inc: &Incircle, total: f64) -> Vec<ArcSpan> {
    let c = &inc.contacts;
    if c.len() < 2 {
        return Vec::new();
    }
    (0..c.len())
        .filter_map(|i| ArcSpan::new(c[i], c[(i + 1) % c.len()], total).ok())
        .collect()
}

fn check_span(curve: &ClosedArcSpline, span: &ArcSpan, base: &Incircle) -> Result<()> {
    let total = curve.length();
    let tol = curve.tol();
    let slack = tol.contact_slack();
    let invalid = |detail: String| GeomError::InvalidSpan {
        t_lo: span.t_lo,
        t_hi: span.t_hi,
        detail,
    };
    for t in [span.t_lo, span.t_hi] {
        let gap = (curve.point_at(t).dist(base.circle.center) - base.radius()).abs();
        if gap > slack {
            return Err(invalid(format!("endpoint {t} is {gap:e} off the base circle")));
        }
    }
    let len = span.length(total);
    let near = 1e-9 * total.max(1.0);
    for &c in &base.contacts {
        if let Some(off) = span.offset_of(c, total) {
            if off > near && off < len - near {
                return Err(invalid(format!("interior contact at {c}")));
            }
        }
    }
    Ok(())
}

fn osculating(curve: &ClosedArcSpline, q: f64) -> Result<Circle> {
    curve.osculating_circle_at(q)?.ok_or_else(|| GeomError::NumericalFailure {
        t_lo: q,
        t_hi: q,
        detail: "straight segment has no osculating circle".into(),
    })
}

/// Finds a parameter in `span` whose osculating disk lies inside the curve.
///
/// Each round takes the span midpoint `q`. If the incircle at `q` is as
/// large as the osculating circle there, `q` is returned. Otherwise the span
/// is replaced by the piece between `q` and the nearest incircle contact on
/// either side, preferring the shorter, so the length at least halves.
pub fn lemma_supporting_point(curve: &ClosedArcSpline, span: ArcSpan, base: &Incircle) -> Result<LemmaRun> {
    let total = curve.length();
    let tol = *curve.tol();
    ArcSpan::new(span.t_lo, span.t_hi, total)?;
    if base.is_dense() {
        // The incircle is the osculating circle of each dense segment, so
        // any interior point of one supports. The base point itself may sit
        // on a junction with a flatter neighbour.
        let mids: Vec<f64> = base
            .dense_segments
            .iter()
            .map(|&i| {
                let segs = curve.path().segments();
                segs[..i].iter().map(|s| s.len).sum::<f64>() + 0.5 * segs[i].len
            })
            .collect();
        let q = mids
            .iter()
            .copied()
            .find(|&m| span.offset_of(m, total).is_some())
            .unwrap_or(mids[0]);
        return Ok(LemmaRun {
            q,
            osculating: osculating(curve, q)?,
            iterations: 0,
            span_lengths: vec![span.length(total)],
            degenerate: false,
            dense_base: true,
        });
    }
    check_span(curve, &span, base)?;
    let near = 1e-9 * total.max(1.0);
    let mut span = span;
    let mut lengths = vec![span.length(total)];
    let mut iterations = 0;
    loop {
        let len = span.length(total);
        let q = span.at(0.5, total);
        if len < tol.eps_arc || iterations >= MAX_ROUNDS {
            return match supports_with_slack(curve, q, 10.0 * tol.tol_geom)? {
                Support::Inside => Ok(LemmaRun {
                    q,
                    osculating: osculating(curve, q)?,
                    iterations,
                    span_lengths: lengths,
                    degenerate: true,
                    dense_base: false,
                }),
                _ => Err(GeomError::NumericalFailure {
                    t_lo: span.t_lo,
                    t_hi: span.t_hi,
                    detail: "no supporting osculating circle at the final span".into(),
                }),
            };
        }
        iterations += 1;
        let inc = incircle_at(curve, q)?;
        let kappa = curve.kappa_at(q);
        if kappa > 0.0 && inc.radius() >= 1.0 / kappa - tol.tol_geom {
            return Ok(LemmaRun {
                q,
                osculating: osculating(curve, q)?,
                iterations,
                span_lengths: lengths,
                degenerate: false,
                dense_base: false,
            });
        }
        let half = 0.5 * len;
        let mut cw: Option<f64> = None;
        let mut ccw: Option<f64> = None;
        for &c in &inc.contacts {
            let Some(off) = span.offset_of(c, total) else {
                continue;
            };
            if (off - half).abs() <= near {
                continue;
            }
            if off < half {
                cw = Some(cw.map_or(off, |a: f64| a.max(off)));
            } else {
                ccw = Some(ccw.map_or(off, |b: f64| b.min(off)));
            }
        }
        let take_cw = match (cw, ccw) {
            (Some(a), Some(b)) => half - a <= b - half,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => {
                // The new incircle touches only outside the span; keep the
                // half facing the nearer outside contact.
                let back = inc.contacts.iter().map(|&c| (q - c).rem_euclid(total)).filter(|&d| d > near).fold(f64::INFINITY, f64::min);
                let fwd = inc.contacts.iter().map(|&c| (c - q).rem_euclid(total)).filter(|&d| d > near).fold(f64::INFINITY, f64::min);
                back <= fwd
            }
        };
        let (lo_off, hi_off) = if take_cw {
            (cw.unwrap_or(0.0), half)
        } else {
            (half, ccw.unwrap_or(len))
        };
        span = ArcSpan {
            t_lo: span.at(lo_off / len, total),
            t_hi: span.at(hi_off / len, total),
        };
        lengths.push(hi_off - lo_off);
    }
}

fn lens_boundary(a: &Circle, b: &Circle, samples: usize) -> Vec<Point2> {
    let d = a.center.dist(b.center);
    let x = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
    let half_a = (x / a.radius).clamp(-1.0, 1.0).acos();
    let base_a = (b.center - a.center).angle();
    let half_b = ((d - x) / b.radius).clamp(-1.0, 1.0).acos();
    let base_b = (a.center - b.center).angle();
    let mut out = Vec::with_capacity(2 * samples + 2);
    for (c, base, half) in [(a, base_a, half_a), (b, base_b, half_b)] {
        for i in 0..=samples {
            let ang = base - half + 2.0 * half * i as f64 / samples as f64;
            out.push(c.center + Point2::from_angle(ang) * c.radius);
        }
    }
    out
}

/// Whether two supporting osculating disks are disjoint or overlap only
/// inside the base incircle.
pub fn osculating_intersection_check(curve: &ClosedArcSpline, q_a: f64, q_b: f64, base: &Incircle) -> Result<bool> {
    let tol = curve.tol().tol_geom;
    let (Some(a), Some(b)) = (curve.osculating_circle_at(q_a)?, curve.osculating_circle_at(q_b)?) else {
        return Ok(true);
    };
    let d = a.center.dist(b.center);
    if d >= a.radius + b.radius - tol {
        return Ok(true);
    }
    let limit = base.radius() + tol;
    let inside = |p: Point2| p.dist(base.circle.center) <= limit;
    if d <= (a.radius - b.radius).abs() {
        let small = if a.radius <= b.radius { a } else { b };
        return Ok(small.center.dist(base.circle.center) + small.radius <= limit);
    }
    Ok(lens_boundary(&a, &b, 64).into_iter().all(inside))
}
