use serde::Serialize;

use super::fit::{two_unit_disks_fit, FitWitness};
use super::incircle::incircle_at;
use super::lemma::{lemma_supporting_point, spans_between_contacts};
use crate::error::{GeomError, Result};
use crate::kernel::{ClosedArcSpline, Point2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessRoute {
    /// Built from the diameter endpoints via incircles and supporting
    /// osculating circles.
    Construction,
    /// Built by the grid fit after the construction failed verification.
    Fallback,
}

/// Candidate unit-disk centers produced at one diameter endpoint.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SideTrace {
    pub t: f64,
    pub point: Point2,
    pub incircle_radius: f64,
    /// The incircle had radius at least one and was shrunk at the point.
    pub shrink: bool,
    pub lemma_params: Vec<f64>,
    pub centers: Vec<Point2>,
    pub lemma_failures: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremWitness {
    pub witness: FitWitness,
    pub route: WitnessRoute,
    pub sides: Vec<SideTrace>,
}

fn side(curve: &ClosedArcSpline, t: f64) -> Result<SideTrace> {
    let tol = curve.tol().tol_geom;
    let total = curve.length();
    let inc = incircle_at(curve, t)?;
    let point = curve.point_at(t);
    let mut trace = SideTrace {
        t,
        point,
        incircle_radius: inc.radius(),
        shrink: false,
        lemma_params: Vec::new(),
        centers: Vec::new(),
        lemma_failures: 0,
    };
    if inc.radius() >= 1.0 - tol {
        trace.shrink = true;
        let c = point + curve.inward_normal(t);
        if curve.signed_distance(c) >= 1.0 - tol {
            trace.centers.push(c);
        }
        return Ok(trace);
    }
    for span in spans_between_contacts(&inc, total) {
        match lemma_supporting_point(curve, span, &inc) {
            Ok(run) => {
                trace.lemma_params.push(run.q);
                let c = run.osculating.center;
                if run.osculating.radius >= 1.0 - tol && curve.signed_distance(c) >= 1.0 - tol {
                    trace.centers.push(c);
                }
            }
            Err(GeomError::NumericalFailure { .. } | GeomError::InvalidSpan { .. }) => trace.lemma_failures += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(trace)
}

fn best_pair(a: &[Point2], b: &[Point2]) -> Option<(Point2, Point2)> {
    let mut best: Option<(f64, Point2, Point2)> = None;
    for &p in a {
        for &q in b {
            let d = p.dist(q);
            if best.is_none_or(|(bd, _, _)| d > bd) {
                best = Some((d, p, q));
            }
        }
    }
    best.map(|(_, p, q)| (p, q))
}

/// Two disjoint open unit disks inside a curve with curvature at most one
/// and diameter at least four.
///
/// At each endpoint of a diameter the incircle either has radius at least
/// one, and the unit disk tangent there is used, or it touches the curve
/// elsewhere and every sub-arc between contacts yields a supporting
/// osculating circle whose concentric unit disk is a candidate. The farthest
/// candidate pair across the two endpoints is verified; if it fails, the
/// grid fit is tried before reporting a counterexample alert.
pub fn theorem_witness(curve: &ClosedArcSpline) -> Result<TheoremWitness> {
    let tol = curve.tol().tol_geom;
    let kmax = curve.max_abs_curvature();
    if kmax > 1.0 + tol {
        return Err(GeomError::Hypothesis {
            hypothesis: "curvature",
            detail: format!("max |kappa| = {kmax} exceeds 1"),
        });
    }
    let diam = curve.diameter();
    if diam.value < 4.0 - tol {
        return Err(GeomError::Hypothesis {
            hypothesis: "diameter",
            detail: format!("diameter {} is below 4", diam.value),
        });
    }
    let sides = vec![
        side(curve, curve.wrap_param(diam.t1))?,
        side(curve, curve.wrap_param(diam.t2))?,
    ];
    let mut pair = best_pair(&sides[0].centers, &sides[1].centers);
    if pair.is_none_or(|(p, q)| p.dist(q) < 2.0 - tol) {
        let all: Vec<Point2> = sides.iter().flat_map(|s| s.centers.iter().copied()).collect();
        if let Some(alt) = best_pair(&all, &all) {
            if pair.is_none_or(|(p, q)| alt.0.dist(alt.1) > p.dist(q)) {
                pair = Some(alt);
            }
        }
    }
    if let Some((p, q)) = pair {
        let w = FitWitness::measure(curve, vec![p, q]);
        if w.is_valid(tol) {
            return Ok(TheoremWitness {
                witness: w,
                route: WitnessRoute::Construction,
                sides,
            });
        }
    }
    let fit = two_unit_disks_fit(curve);
    match fit.witness {
        Some(witness) => Ok(TheoremWitness {
            witness,
            route: WitnessRoute::Fallback,
            sides,
        }),
        None => Err(GeomError::CounterexampleAlert(format!(
            "no two disjoint unit disks found; feasible diameter {}",
            fit.feasible_diameter
        ))),
    }
}
