use std::f64::consts::TAU;

use serde::Serialize;

use crate::error::{GeomError, Result};
use crate::kernel::{wrap_tau, Circle, ClosedArcSpline, Point2};

/// Counterclockwise arc of a circle, by start angle and sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CircleArc {
    pub start_angle: f64,
    pub sweep: f64,
}

/// The two arcs of an incircle between its base point and a second contact.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SigmaSplit {
    pub second_t: f64,
    /// From the base point counterclockwise to the second contact.
    pub sigma1: CircleArc,
    /// From the second contact counterclockwise back to the base point.
    pub sigma2: CircleArc,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Incircle {
    pub circle: Circle,
    pub base_t: f64,
    /// Sorted boundary parameters touching the circle, including `base_t`.
    pub contacts: Vec<f64>,
    /// Segments lying entirely on the circle.
    pub dense_segments: Vec<usize>,
    pub sigma_split: Option<SigmaSplit>,
}

impl Incircle {
    pub fn radius(&self) -> f64 {
        self.circle.radius
    }

    pub fn is_dense(&self) -> bool {
        !self.dense_segments.is_empty()
    }

    /// Contacts other than the base point, in counterclockwise order from it.
    pub fn other_contacts(&self, total: f64, near: f64) -> Vec<f64> {
        let mut v: Vec<f64> = self
            .contacts
            .iter()
            .copied()
            .filter(|&c| {
                let off = (c - self.base_t).rem_euclid(total);
                off > near && off < total - near
            })
            .collect();
        v.sort_by(|a, b| {
            let oa = (a - self.base_t).rem_euclid(total);
            let ob = (b - self.base_t).rem_euclid(total);
            oa.total_cmp(&ob)
        });
        v
    }
}

/// Boundary parameters where the curve touches the circle from outside.
///
/// Each segment contributes its nearest point when that point is at
/// `radius ± slack`. A nearest point sitting at a segment end only counts if
/// the neighbouring segment also attains its minimum there, so a contact
/// just past a junction is not reported twice.
pub(crate) fn harvest_contacts(
    curve: &ClosedArcSpline,
    center: Point2,
    radius: f64,
    slack: f64,
) -> (Vec<f64>, Vec<usize>) {
    let pieces = curve.pieces();
    let n = pieces.len();
    let closest: Vec<(f64, f64)> = pieces.iter().map(|p| p.closest(center)).collect();
    let mut contacts = Vec::new();
    let mut dense = Vec::new();
    for (i, p) in pieces.iter().enumerate() {
        if let Some((c, r)) = p.circle() {
            if c.dist(center) <= slack && (r - radius).abs() <= slack {
                dense.push(i);
                contacts.push(p.t0);
                contacts.push(p.t0 + 0.5 * p.len);
                contacts.push(p.t0 + p.len);
                continue;
            }
        }
        let (d, s) = closest[i];
        if (d - radius).abs() > slack {
            continue;
        }
        let at_start = s <= 0.0;
        let at_end = s >= p.len;
        if at_start {
            let prev = (i + n - 1) % n;
            if closest[prev].1 < pieces[prev].len {
                continue;
            }
        }
        if at_end {
            let next = (i + 1) % n;
            if closest[next].1 > 0.0 {
                continue;
            }
        }
        contacts.push(p.t0 + s);
    }
    let total = curve.length();
    let mut wrapped: Vec<f64> = contacts.into_iter().map(|t| curve.wrap_param(t)).collect();
    wrapped.sort_by(f64::total_cmp);
    let merge = 1e-9 * total.max(1.0);
    let mut out: Vec<f64> = Vec::with_capacity(wrapped.len());
    for t in wrapped {
        if out.last().is_none_or(|&l| t - l > merge) {
            out.push(t);
        }
    }
    if out.len() > 1 && out[0] + total - out[out.len() - 1] <= merge {
        out.pop();
    }
    (out, dense)
}

/// Largest disk inside the curve tangent to it at arclength `t`.
///
/// Disks tangent at `p` with centers `p + r·n` on the inward normal are
/// nested in `r`, so feasibility `signed_distance(center) >= r - tol_geom`
/// is monotone and the radius is found by bisection to `tol_radius`.
pub fn incircle_at(curve: &ClosedArcSpline, t: f64) -> Result<Incircle> {
    let (p, _, _) = curve.evaluate(t)?;
    let tol = *curve.tol();
    let normal = curve.inward_normal(t);
    let feasible = |r: f64| curve.signed_distance(p + normal * r) >= r - tol.tol_geom;
    let mut hi = curve.bbox_diagonal();
    if feasible(hi) {
        return Err(GeomError::Unbounded { radius: hi });
    }
    let mut lo = 0.0;
    while hi - lo > tol.tol_radius {
        let mid = 0.5 * (lo + hi);
        if feasible(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut radius = lo.max(tol.tol_radius);
    // Bisection overshoots by up to tol_geom when the incircle is the
    // osculating circle; the osculating radius is an exact upper bound.
    let kappa = curve.kappa_at(t);
    if kappa > 0.0 {
        radius = radius.min(1.0 / kappa);
    }
    let center = p + normal * radius;
    let (mut contacts, dense_segments) = harvest_contacts(curve, center, radius, tol.contact_slack());
    let total = curve.length();
    if !contacts
        .iter()
        .any(|&c| (c - t).rem_euclid(total).min((t - c).rem_euclid(total)) <= 1e-9 * total.max(1.0))
    {
        contacts.push(t);
        contacts.sort_by(f64::total_cmp);
    }
    let mut inc = Incircle {
        circle: Circle { center, radius },
        base_t: t,
        contacts,
        dense_segments,
        sigma_split: None,
    };
    let near = 1e-9 * total.max(1.0);
    if let Some(&second) = inc.other_contacts(total, near).first() {
        let a_p = (p - center).angle();
        let a_q = (curve.point_at(second) - center).angle();
        let s1 = wrap_tau(a_q - a_p);
        inc.sigma_split = Some(SigmaSplit {
            second_t: second,
            sigma1: CircleArc {
                start_angle: wrap_tau(a_p),
                sweep: s1,
            },
            sigma2: CircleArc {
                start_angle: wrap_tau(a_q),
                sweep: TAU - s1,
            },
        });
    }
    Ok(inc)
}

/// Whether the osculating disk at a point lies inside the curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Support {
    Inside,
    NotInside,
    /// Straight segment: there is no finite osculating circle.
    NotApplicable,
}

pub fn supports_from_inside(curve: &ClosedArcSpline, t: f64) -> Result<Support> {
    supports_with_slack(curve, t, curve.tol().tol_geom)
}

pub(crate) fn supports_with_slack(curve: &ClosedArcSpline, t: f64, slack: f64) -> Result<Support> {
    let Some(osc) = curve.osculating_circle_at(t)? else {
        return Ok(Support::NotApplicable);
    };
    if curve.kappa_at(t) < 0.0 {
        return Ok(Support::NotInside);
    }
    Ok(if curve.signed_distance(osc.center) >= osc.radius - slack {
        Support::Inside
    } else {
        Support::NotInside
    })
}
