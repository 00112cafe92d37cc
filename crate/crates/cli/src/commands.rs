use std::f64::consts::PI;
use std::path::Path;

use puddle::gallery::{self, GalleryParams};
use puddle::moons::{
    incircle_at, k_unit_disks_fit, lemma_supporting_point, spans_between_contacts, theorem_witness, two_unit_disks_fit,
    FitWitness, Incircle, LemmaRun,
};
use puddle::oracle::{brute_diameter, brute_length};
use puddle::search::{counterexample_audit, search as run_search, Objective, SearchConfig};
use puddle::svg::{render as render_svg, Overlay, RenderSpec};
use puddle::{ArcSpan, Circle, ClosedArcSpline, CurveReport, Point2, ToleranceConfig};
use serde::{Deserialize, Serialize};

use crate::io::{self, CmdResult, Failure, ALERT, OK};
use crate::{GalleryArgs, RenderArgs, SearchArgs};

#[derive(Serialize)]
struct FitSummary {
    found: bool,
    witness: Option<FitWitness>,
    feasible_diameter: f64,
}

#[derive(Serialize)]
struct OracleDeltas {
    brute_length: f64,
    length_delta: f64,
    brute_diameter: f64,
    diameter_delta: f64,
}

#[derive(Serialize)]
struct CheckOutput {
    report: CurveReport,
    fit: FitSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleDeltas>,
}

fn unit_circles(centers: &[Point2]) -> Vec<Circle> {
    centers.iter().map(|&c| Circle { center: c, radius: 1.0 }).collect()
}

pub fn check(input: &Path, oracle: bool, tol: ToleranceConfig) -> CmdResult {
    let curve = io::read_curve(input, tol)?;
    let report = curve.report();
    let t = tol.tol_geom;
    let bounded = report.max_abs_kappa <= 1.0 + t;
    let mut fit = two_unit_disks_fit(&curve);
    if bounded && report.diameter >= 4.0 - t && fit.witness.is_none() {
        let tw = theorem_witness(&curve)?;
        fit.witness = Some(tw.witness);
    }
    if bounded && report.length >= 4.0 * PI - t && (fit.witness.is_none() || report.diameter < 4.0 - t) {
        let audit = counterexample_audit(&curve);
        if audit.counterexample {
            io::emit(&audit);
            eprintln!("counterexample alert: {}", audit.verdict);
            return Ok(ALERT);
        }
    }
    let oracle = oracle.then(|| {
        let bl = brute_length(curve.path(), 100_000);
        let (bd, _, _) = brute_diameter(curve.path(), 10_000);
        OracleDeltas {
            brute_length: bl,
            length_delta: report.length - bl,
            brute_diameter: bd,
            diameter_delta: report.diameter - bd,
        }
    });
    eprintln!(
        "length {:.12} diameter {:.12} max|kappa| {:.12} fit: {}",
        report.length,
        report.diameter,
        report.max_abs_kappa,
        if fit.witness.is_some() { "yes" } else { "no" }
    );
    io::emit(&CheckOutput {
        report,
        fit: FitSummary {
            found: fit.witness.is_some(),
            witness: fit.witness,
            feasible_diameter: fit.feasible_diameter,
        },
        oracle,
    });
    Ok(OK)
}

/// Unit circles worth drawing on top of a gallery curve.
fn figure_overlay(name: &str, curve: &ClosedArcSpline, l: f64) -> Overlay {
    let mut circles = Vec::new();
    if name == "three-circle-border" {
        circles.extend(unit_circles(&gallery::three_circle_vertices(l)));
    } else {
        let centers = match theorem_witness(curve) {
            Ok(w) => Some(w.witness.centers),
            Err(_) => two_unit_disks_fit(curve).witness.map(|w| w.centers),
        };
        if let Some(c) = centers {
            circles.extend(unit_circles(&c));
        }
    }
    Overlay {
        circles,
        points: Vec::new(),
        labels: vec![format!("{name}: length {:.6}", curve.length())],
    }
}

pub fn gallery(args: &GalleryArgs, tol: ToleranceConfig) -> CmdResult {
    let mut params = GalleryParams::new(args.name.clone());
    for (key, value) in [
        ("r", args.r),
        ("a", args.a),
        ("d", args.d),
        ("R", args.big_r),
        ("l", args.l),
        ("width", args.width),
        ("rho", args.rho),
    ] {
        if let Some(v) = value {
            params = params.with(key, v);
        }
    }
    let mut curve = params.build()?.with_tol(tol);
    if let Some(i) = args.exchange {
        let ex = gallery::arc_exchange(&curve, i)?;
        eprintln!(
            "exchanged segment {i}: angles {:?}, length {:.12} -> {:.12}",
            ex.angles, ex.length_before, ex.length_after
        );
        curve = ex.curve;
    }
    let json = io::to_json(&curve.to_json());
    match &args.out {
        Some(p) => io::write_file(p, &(json + "\n"))?,
        None => println!("{json}"),
    }
    if let Some(svg) = &args.svg {
        let spec = RenderSpec::default().with_overlay(figure_overlay(&args.name, &curve, args.l.unwrap_or(0.2)));
        io::write_file(svg, &render_svg(curve.path(), &spec)?)?;
    }
    let r = curve.report();
    eprintln!("{}: length {:.12} diameter {:.12}", args.name, r.length, r.diameter);
    Ok(OK)
}

#[derive(Serialize)]
struct SpanRun {
    span: ArcSpan,
    q: f64,
    osculating: Circle,
    iterations: usize,
    span_lengths: Vec<f64>,
    degenerate: bool,
}

impl SpanRun {
    fn new(span: ArcSpan, run: LemmaRun) -> Self {
        Self {
            span,
            q: run.q,
            osculating: run.osculating,
            iterations: run.iterations,
            span_lengths: run.span_lengths,
            degenerate: run.degenerate,
        }
    }
}

#[derive(Serialize)]
struct LemmaOutput {
    incircle: Incircle,
    /// `dense`, `shrink` or `lemma`.
    case: &'static str,
    message: String,
    runs: Vec<SpanRun>,
}

pub fn lemma(input: &Path, t: f64, tol: ToleranceConfig) -> CmdResult {
    let curve = io::read_curve(input, tol)?;
    let inc = incircle_at(&curve, t)?;
    let total = curve.length();
    let spans = spans_between_contacts(&inc, total);
    let (case, message, runs) = if inc.is_dense() {
        (
            "dense",
            format!(
                "incircle of radius {} touches along segments {:?}; every point there supports",
                inc.radius(),
                inc.dense_segments
            ),
            Vec::new(),
        )
    } else if spans.is_empty() {
        (
            "shrink",
            format!("incircle of radius {} has no second contact", inc.radius()),
            Vec::new(),
        )
    } else {
        let mut runs = Vec::new();
        for span in spans {
            runs.push(SpanRun::new(span, lemma_supporting_point(&curve, span, &inc)?));
        }
        ("lemma", format!("{} spans between contacts", runs.len()), runs)
    };
    eprintln!("{message}");
    io::emit(&LemmaOutput {
        incircle: inc,
        case,
        message,
        runs,
    });
    Ok(OK)
}

pub fn witness(input: &Path, svg: Option<&Path>, tol: ToleranceConfig) -> CmdResult {
    let curve = io::read_curve(input, tol)?;
    let tw = theorem_witness(&curve)?;
    eprintln!(
        "witness via {:?}: gap {:.12} clearance {:.12}",
        tw.route, tw.witness.min_pair_gap, tw.witness.clearance
    );
    if let Some(p) = svg {
        let spec = RenderSpec::default().with_overlay(Overlay {
            circles: unit_circles(&tw.witness.centers),
            points: tw.witness.centers.clone(),
            labels: Vec::new(),
        });
        io::write_file(p, &render_svg(curve.path(), &spec)?)?;
    }
    io::emit(&tw.witness);
    Ok(OK)
}

pub fn fit(input: &Path, k: usize, tol: ToleranceConfig) -> CmdResult {
    let curve = io::read_curve(input, tol)?;
    let result = k_unit_disks_fit(&curve, k)?;
    io::emit(&result);
    Ok(OK)
}

/// Diameter below which a conjecture-direction result is audited.
const CONJECTURE_MARGIN: f64 = 1e-3;

pub fn search(args: &SearchArgs, tol: ToleranceConfig) -> CmdResult {
    let objective: Objective = args.objective.parse()?;
    let mut cfg = SearchConfig::new(objective);
    cfg.n_segments = args.segments;
    cfg.restarts = args.restarts;
    cfg.rng_seed = args.seed;
    cfg.max_iters = args.max_iters;
    cfg.tol = tol;
    if let Some(p) = &args.start {
        cfg.seed_curve = Some(io::read_curve_json(p)?);
    }
    let result = run_search(&cfg)?;
    let json = io::to_json(&result);
    match &args.out {
        Some(p) => io::write_file(p, &(json + "\n"))?,
        None => println!("{json}"),
    }
    eprintln!(
        "feasible {} objective {:?} (restart {:?})",
        result.feasible, result.objective_value, result.best_restart
    );
    if objective == Objective::MinDiameterGivenLength {
        if let (Some(curve), Some(d)) = (&result.best_curve, result.objective_value) {
            if d < cfg.diameter_floor - CONJECTURE_MARGIN {
                let audit = counterexample_audit(curve);
                eprintln!("{}", io::to_json(&audit));
                if audit.counterexample {
                    eprintln!("counterexample alert: {}", audit.verdict);
                    return Ok(ALERT);
                }
            }
        }
    }
    Ok(OK)
}

#[derive(Deserialize)]
struct Centers {
    centers: Vec<Point2>,
}

pub fn render(args: &RenderArgs, tol: ToleranceConfig) -> CmdResult {
    let curve = io::read_curve(&args.input, tol)?;
    let mut spec: RenderSpec = match &args.spec {
        Some(p) => io::parse(p, "render spec")?,
        None => RenderSpec::default(),
    };
    if let Some(w) = args.width {
        spec.width_px = w;
    }
    if let Some(h) = args.height {
        spec.height_px = h;
    }
    if let Some(s) = args.stroke {
        spec.stroke = s;
    }
    if let Some(p) = &args.witness {
        let c: Centers = io::parse(p, "witness")?;
        spec.overlays.push(Overlay {
            circles: unit_circles(&c.centers),
            points: c.centers,
            labels: Vec::new(),
        });
    }
    let svg = render_svg(curve.path(), &spec).map_err(Failure::from)?;
    io::write_file(&args.out, &svg)?;
    Ok(OK)
}

