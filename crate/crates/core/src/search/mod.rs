//! Derivative-free search over arc-spline parameters.
//!
//! A curve with `n` segments is the vector `[heading, kappa_1..n, len_1..n]`
//! started at the origin. Each restart draws a random admissible curve and
//! runs Nelder–Mead on objective plus penalty; the winner is closed exactly,
//! scaled onto the constraint, and re-validated before it is reported.

mod audit;
mod nelder_mead;
mod random;
mod repair;

use std::f64::consts::{PI, TAU};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use audit::{counterexample_audit, Audit};
pub use random::{random_valid_curve, Sampler};

use crate::error::{GeomError, Result};
use crate::kernel::{crossing_count, diameter, wrap_tau, ArcPath, ClosedArcSpline, CurveJson, CurveReport, Point2, Segment};
use crate::tol::ToleranceConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    /// Minimize the diameter subject to length ≥ `length_floor`.
    MinDiameterGivenLength,
    /// Minimize the length subject to diameter ≥ `diameter_floor`.
    MinLengthGivenDiameter,
}

impl std::str::FromStr for Objective {
    type Err = GeomError;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "min_diameter_given_length" => Ok(Self::MinDiameterGivenLength),
            "min_length_given_diameter" => Ok(Self::MinLengthGivenDiameter),
            _ => Err(GeomError::Parameter(format!("unknown objective {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PenaltyWeights {
    pub close: f64,
    pub constraint: f64,
    pub simple: f64,
}

impl Default for PenaltyWeights {
    fn default() -> Self {
        Self {
            close: 1e3,
            constraint: 1e3,
            simple: 10.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub n_segments: usize,
    pub restarts: usize,
    pub rng_seed: u64,
    /// Objective evaluations per restart.
    pub max_iters: usize,
    pub penalty_weights: PenaltyWeights,
    pub objective: Objective,
    pub length_floor: f64,
    pub diameter_floor: f64,
    /// Replaces the random start of restart 0.
    pub seed_curve: Option<CurveJson>,
    pub tol: ToleranceConfig,
}

impl SearchConfig {
    pub fn new(objective: Objective) -> Self {
        Self {
            n_segments: 8,
            restarts: 20,
            rng_seed: 0,
            max_iters: 20_000,
            penalty_weights: PenaltyWeights::default(),
            objective,
            length_floor: 4.0 * PI,
            diameter_floor: 4.0,
            seed_curve: None,
            tol: ToleranceConfig::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let w = self.penalty_weights;
        if self.n_segments < 3 {
            return Err(GeomError::Parameter("n_segments must be at least 3".into()));
        }
        if self.restarts < 1 {
            return Err(GeomError::Parameter("restarts must be at least 1".into()));
        }
        if !(w.close > 0.0 && w.constraint > 0.0 && w.simple > 0.0) {
            return Err(GeomError::Parameter("penalty weights must be positive".into()));
        }
        if !(self.length_floor > 0.0 && self.diameter_floor > 0.0) {
            return Err(GeomError::Parameter("floors must be positive".into()));
        }
        self.tol.validate()
    }

    fn floor(&self) -> f64 {
        match self.objective {
            Objective::MinDiameterGivenLength => self.length_floor,
            Objective::MinLengthGivenDiameter => self.diameter_floor,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HistoryEntry {
    pub iter: usize,
    /// Objective plus penalty of the best simplex vertex.
    pub merit: f64,
    pub objective: f64,
    pub penalty: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RestartOutcome {
    pub index: usize,
    pub feasible: bool,
    pub objective: Option<f64>,
    pub evaluations: usize,
    /// Entries are recorded when the best merit improves.
    pub history: Vec<HistoryEntry>,
    #[serde(skip)]
    curve: Option<ClosedArcSpline>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchResult {
    pub feasible: bool,
    pub objective_value: Option<f64>,
    pub best_restart: Option<usize>,
    pub best_curve: Option<ClosedArcSpline>,
    pub best_report: Option<CurveReport>,
    pub restarts: Vec<RestartOutcome>,
}

const KAPPA_MAX: f64 = 1.0;
const LEN_MIN: f64 = 0.05;
const LEN_MAX: f64 = 20.0;

fn encode(path: &ArcPath) -> Vec<f64> {
    let segs = path.segments();
    let mut x = vec![path.heading()];
    x.extend(segs.iter().map(|s| s.kappa));
    x.extend(segs.iter().map(|s| s.len));
    x
}

fn decode(x: &[f64]) -> Option<ArcPath> {
    let n = (x.len() - 1) / 2;
    let segs: Vec<Segment> = (0..n)
        .map(|i| {
            let kappa = x[1 + i].clamp(-KAPPA_MAX, KAPPA_MAX);
            let mut len = x[1 + n + i].clamp(LEN_MIN, LEN_MAX);
            if kappa != 0.0 {
                len = len.min((TAU - 1e-6) / kappa.abs());
            }
            Segment { kappa, len }
        })
        .collect();
    if x.iter().any(|v| !v.is_finite()) {
        return None;
    }
    ArcPath::new(Point2::ORIGIN, wrap_tau(x[0]), segs).ok()
}

struct Parts {
    objective: f64,
    penalty: f64,
}

fn measure(cfg: &SearchConfig, path: &ArcPath) -> Parts {
    let gap = path.end_point().dist(path.start());
    let turn = path.turning() - TAU;
    let (objective, constraint) = match cfg.objective {
        Objective::MinDiameterGivenLength => {
            let d = diameter(path, cfg.tol.tol_geom).value;
            (d, path.length())
        }
        Objective::MinLengthGivenDiameter => {
            let d = diameter(path, cfg.tol.tol_geom).value;
            (path.length(), d)
        }
    };
    let violation = (cfg.floor() - constraint).max(0.0);
    let crossings = crossing_count(path, cfg.tol.tol_geom) as f64;
    let w = cfg.penalty_weights;
    Parts {
        objective,
        penalty: w.close * (gap * gap + turn * turn) + w.constraint * violation * violation + w.simple * crossings,
    }
}

fn constrained_value(cfg: &SearchConfig, curve: &ClosedArcSpline) -> (f64, f64) {
    let d = curve.diameter().value;
    match cfg.objective {
        Objective::MinDiameterGivenLength => (d, curve.length()),
        Objective::MinLengthGivenDiameter => (curve.length(), d),
    }
}

/// Scales a closed curve so the constraint holds with equality, when that
/// keeps |kappa| ≤ 1.
fn onto_constraint(cfg: &SearchConfig, curve: ClosedArcSpline) -> Option<ClosedArcSpline> {
    let (_, c) = constrained_value(cfg, &curve);
    let f = cfg.floor() / c;
    if !(f.is_finite() && f > 0.0) {
        return None;
    }
    let kmax = curve.max_abs_curvature();
    if f < 1.0 && kmax / f > KAPPA_MAX {
        return Some(curve);
    }
    let path = curve.path().scaled(f).ok()?;
    ClosedArcSpline::from_path(path, cfg.tol).ok()
}

fn is_feasible(cfg: &SearchConfig, curve: &ClosedArcSpline) -> bool {
    let tol = cfg.tol.tol_geom;
    let (_, c) = constrained_value(cfg, curve);
    curve.max_abs_curvature() <= KAPPA_MAX + tol && c >= cfg.floor() - tol
}

/// Closes, scales and validates a parameter vector.
fn finish(cfg: &SearchConfig, x: &[f64]) -> Option<(ClosedArcSpline, f64)> {
    let path = decode(x)?;
    let closed = repair::repair_path(&path)?;
    let curve = ClosedArcSpline::from_path(closed, cfg.tol).ok()?;
    let curve = onto_constraint(cfg, curve)?;
    if !is_feasible(cfg, &curve) {
        return None;
    }
    let (obj, _) = constrained_value(cfg, &curve);
    Some((curve, obj))
}

fn run_restart(cfg: &SearchConfig, index: usize) -> RestartOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    rng.set_stream(index as u64);
    let start = match (&cfg.seed_curve, index) {
        (Some(json), 0) => ClosedArcSpline::from_json(json, cfg.tol),
        _ => random_valid_curve(cfg.n_segments, &mut rng),
    };
    let mut out = RestartOutcome {
        index,
        feasible: false,
        objective: None,
        evaluations: 0,
        history: Vec::new(),
        curve: None,
    };
    let Ok(start) = start else {
        return out;
    };
    let start = onto_constraint(cfg, start.clone()).unwrap_or(start);
    let x0 = encode(start.path());
    let n = start.segments().len();
    let mean_len = start.length() / n as f64;
    let mut step = vec![0.3; 1 + n];
    step.extend(std::iter::repeat_n(0.3 * mean_len, n));

    let mut f = |x: &[f64]| match decode(x) {
        Some(p) => {
            let parts = measure(cfg, &p);
            parts.objective + parts.penalty
        }
        None => f64::INFINITY,
    };
    let mut best_x = x0.clone();
    let mut best_v = f(&x0);
    let mut iter = 0;
    let mut history = Vec::new();
    let mut evals = 1;
    for cycle in 0..6 {
        if evals >= cfg.max_iters {
            break;
        }
        let scale = 0.5f64.powi(cycle);
        let st: Vec<f64> = step.iter().map(|s| s * scale).collect();
        let before = best_v;
        let (x, v, used) = nelder_mead::minimize(&mut f, &best_x, &st, cfg.max_iters - evals, 1e-13, |xb, vb| {
            iter += 1;
            if history.last().is_none_or(|h: &HistoryEntry| vb < h.merit) {
                if let Some(p) = decode(xb) {
                    let parts = measure(cfg, &p);
                    history.push(HistoryEntry {
                        iter,
                        merit: vb,
                        objective: parts.objective,
                        penalty: parts.penalty,
                    });
                }
            }
        });
        evals += used;
        if v < best_v {
            best_x = x;
            best_v = v;
        }
        if before - best_v <= 1e-12 * (1.0 + before.abs()) && cycle > 0 {
            break;
        }
    }
    out.evaluations = evals;
    out.history = history;
    let mut cands = Vec::new();
    if let Some(c) = finish(cfg, &best_x) {
        cands.push(c);
    }
    if is_feasible(cfg, &start) {
        let (obj, _) = constrained_value(cfg, &start);
        cands.push((start, obj));
    }
    if let Some((curve, obj)) = cands.into_iter().min_by(|a, b| a.1.total_cmp(&b.1)) {
        out.feasible = true;
        out.objective = Some(obj);
        out.curve = Some(curve);
    }
    out
}

/// Multi-start penalized search. Restarts run in parallel; the result is
/// the best feasible restart, ties going to the lowest index.
pub fn search(cfg: &SearchConfig) -> Result<SearchResult> {
    cfg.validate()?;
    let restarts: Vec<RestartOutcome> = (0..cfg.restarts).into_par_iter().map(|i| run_restart(cfg, i)).collect();
    let mut best: Option<(usize, f64)> = None;
    for r in &restarts {
        if let Some(obj) = r.objective {
            if best.is_none_or(|(_, b)| obj < b) {
                best = Some((r.index, obj));
            }
        }
    }
    let best_curve = best.and_then(|(i, _)| restarts[i].curve.clone());
    Ok(SearchResult {
        feasible: best_curve.is_some(),
        objective_value: best.map(|(_, v)| v),
        best_restart: best.map(|(i, _)| i),
        best_report: best_curve.as_ref().map(|c| c.report()),
        best_curve,
        restarts,
    })
}
