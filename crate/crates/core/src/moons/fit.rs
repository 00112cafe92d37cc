use serde::Serialize;

use crate::error::{GeomError, Result};
use crate::kernel::{ClosedArcSpline, Point2};
use crate::oracle::{convex_hull, feasible_set_diameter, project_to_clearance, refine_spread, scan, GridSpec};

/// Centers of `k` disjoint open unit disks inside a curve.
///
/// `clearance` and `min_pair_gap` are always recomputed from the centers.
/// With a single center the gap is infinite and serializes as `null`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FitWitness {
    pub k: usize,
    pub centers: Vec<Point2>,
    pub clearance: f64,
    pub min_pair_gap: f64,
}

impl FitWitness {
    pub fn measure(curve: &ClosedArcSpline, centers: Vec<Point2>) -> Self {
        let clearance = centers
            .iter()
            .map(|&c| curve.signed_distance(c))
            .fold(f64::INFINITY, f64::min);
        let mut gap = f64::INFINITY;
        for i in 0..centers.len() {
            for j in i + 1..centers.len() {
                gap = gap.min(centers[i].dist(centers[j]));
            }
        }
        Self {
            k: centers.len(),
            centers,
            clearance,
            min_pair_gap: gap,
        }
    }

    pub fn is_valid(&self, tol: f64) -> bool {
        self.k >= 1 && self.clearance >= 1.0 - tol && self.min_pair_gap >= 2.0 - tol
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TwoDiskFit {
    pub witness: Option<FitWitness>,
    /// Lower bound on the diameter of the set of unit-clearance centers.
    pub feasible_diameter: f64,
}

pub fn two_unit_disks_fit(curve: &ClosedArcSpline) -> TwoDiskFit {
    two_unit_disks_fit_with(curve, curve.tol().grid_h)
}

pub fn two_unit_disks_fit_with(curve: &ClosedArcSpline, h: f64) -> TwoDiskFit {
    let tol = curve.tol().tol_geom;
    let grid = GridSpec::for_curve(curve.path(), h);
    let fd = feasible_set_diameter(curve, 1.0, &grid);
    let witness = fd
        .witnesses
        .filter(|_| fd.value >= 2.0 - tol)
        .map(|(a, b)| FitWitness::measure(curve, vec![a, b]))
        .filter(|w| w.is_valid(tol));
    TwoDiskFit {
        witness,
        feasible_diameter: fd.value,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum KFit {
    Found { witness: FitWitness },
    /// The search is incomplete: this does not prove that no packing exists.
    NotFound { best_min_gap: f64, heuristic: bool },
}

/// Greedy farthest-point seeds, starting from one hull pair.
fn greedy(seeds: &[Point2], a: Point2, b: Point2, k: usize) -> Vec<Point2> {
    let mut chosen = vec![a, b];
    let mut dmin: Vec<f64> = seeds.iter().map(|s| s.dist(a).min(s.dist(b))).collect();
    while chosen.len() < k {
        let (i, _) = dmin
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |acc, (i, &d)| if d > acc.1 { (i, d) } else { acc });
        let p = seeds[i];
        chosen.push(p);
        for (d, s) in dmin.iter_mut().zip(seeds) {
            *d = d.min(s.dist(p));
        }
    }
    chosen
}

const START_PAIRS: usize = 6;

/// Heuristic search for `k` disjoint open unit disks inside the curve.
pub fn k_unit_disks_fit(curve: &ClosedArcSpline, k: usize) -> Result<KFit> {
    if k < 1 {
        return Err(GeomError::Parameter("k must be at least 1".into()));
    }
    let tol = curve.tol().tol_geom;
    let not_found = |g: f64| KFit::NotFound {
        best_min_gap: g,
        heuristic: true,
    };
    if k == 2 {
        let fit = two_unit_disks_fit(curve);
        return Ok(match fit.witness {
            Some(witness) => KFit::Found { witness },
            None => not_found(fit.feasible_diameter),
        });
    }
    let h = curve.tol().grid_h;
    let grid = GridSpec::for_curve(curve.path(), h);
    let mut seeds = scan(curve, &grid, 1.0 - h);
    if seeds.is_empty() {
        return Ok(not_found(0.0));
    }
    if k == 1 {
        seeds.sort_by(|a, b| b.1.total_cmp(&a.1));
        let found = seeds
            .iter()
            .find_map(|&(s, _)| project_to_clearance(curve, s, 1.0))
            .map(|c| FitWitness::measure(curve, vec![c]))
            .filter(|w| w.is_valid(tol));
        return Ok(match found {
            Some(witness) => KFit::Found { witness },
            None => not_found(0.0),
        });
    }
    let pts: Vec<Point2> = seeds.into_iter().map(|(p, _)| p).collect();
    let hull = convex_hull(&pts);
    let mut pairs: Vec<(f64, usize, usize)> = Vec::new();
    for i in 0..hull.len() {
        for j in i + 1..hull.len() {
            pairs.push((hull[i].dist(hull[j]), i, j));
        }
    }
    pairs.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    if pairs.is_empty() {
        pairs.push((0.0, 0, 0));
    }
    let step0 = 0.25 * curve.bbox_diagonal();
    let mut best: Option<FitWitness> = None;
    for &(_, i, j) in pairs.iter().take(START_PAIRS) {
        let start = greedy(&pts, hull[i], hull[j], k);
        let Some(mut centers) = start
            .iter()
            .map(|&c| project_to_clearance(curve, c, 1.0))
            .collect::<Option<Vec<_>>>()
        else {
            continue;
        };
        refine_spread(curve, &mut centers, 1.0, step0);
        let w = FitWitness::measure(curve, centers);
        if w.clearance < 1.0 - tol {
            continue;
        }
        if best.as_ref().is_none_or(|b| w.min_pair_gap > b.min_pair_gap) {
            best = Some(w);
        }
        if best.as_ref().is_some_and(|b| b.is_valid(tol)) {
            break;
        }
    }
    Ok(match best {
        Some(w) if w.is_valid(tol) => KFit::Found { witness: w },
        Some(w) => not_found(w.min_pair_gap),
        None => not_found(0.0),
    })
}
