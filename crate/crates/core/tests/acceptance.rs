//! Acceptance criteria. Each criterion prints one `criterion N: PASS|FAIL`
//! line with its measured values and runtime; the process exits non-zero if
//! any criterion fails.

use std::f64::consts::PI;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use puddle::gallery;
use puddle::kernel::ArcSpan;
use puddle::moons::{
    incircle_at, k_unit_disks_fit, lemma_supporting_point, spans_between_contacts, supports_from_inside,
    theorem_witness, two_unit_disks_fit, KFit, Support,
};
use puddle::oracle::{brute_diameter, brute_incircle_radius, brute_length};
use puddle::search::{counterexample_audit, search, Objective, Sampler, SearchConfig};
use puddle::{ClosedArcSpline, GeomError, Point2};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const H: f64 = 0.01;
const LEN_TOL: f64 = 1e-9;
const DIAM_TOL: f64 = 1e-6;
const THREE_LEN_TOL: f64 = 1e-6;
const LIMIT_TOL: f64 = 1e-2;
const WITNESS_TOL: f64 = 1e-6;
const CONVERSE_SLACK: f64 = 4.0 * H + 1e-6;
const EPS_ARC: f64 = 1e-6;
const SEARCH_REL: f64 = 0.01;
const CONJECTURE_MARGIN: f64 = 1e-3;
const ORACLE_LEN_REL: f64 = 1e-6;
const ORACLE_DIAM: f64 = 1e-4;
const ORACLE_RADIUS: f64 = 10.0 * 1e-9;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within_budget(start: Instant, budget: Duration) -> Result<(), String> {
    let el = start.elapsed();
    check(el < budget, || format!("runtime {el:.2?} exceeds {budget:?}"))
}

fn seg_mid(c: &ClosedArcSpline, i: usize) -> f64 {
    let segs = c.path().segments();
    segs[..i].iter().map(|s| s.len).sum::<f64>() + segs[i].len / 2.0
}

fn criterion_1() -> Outcome {
    let t0 = Instant::now();
    let s = gallery::stadium(2.0).map_err(|e| e.to_string())?;
    let r = s.report();
    check((r.length - (2.0 * PI + 4.0)).abs() <= LEN_TOL, || format!("length {}", r.length))?;
    check((r.diameter - 4.0).abs() <= DIAM_TOL, || format!("diameter {}", r.diameter))?;
    within_budget(t0, Duration::from_secs(1))?;
    Ok(format!("length {:.12} diameter {:.9}", r.length, r.diameter))
}

fn criterion_2() -> Outcome {
    let t0 = Instant::now();
    let c = gallery::circle(2.0).map_err(|e| e.to_string())?;
    let r = c.report();
    check((r.length - 4.0 * PI).abs() <= LEN_TOL, || format!("length {}", r.length))?;
    check((r.diameter - 4.0).abs() <= DIAM_TOL, || format!("diameter {}", r.diameter))?;
    let fit = two_unit_disks_fit(&c);
    let w = fit.witness.ok_or("no two-disk witness")?;
    check((w.min_pair_gap - 2.0).abs() <= 2.0 * H, || format!("gap {}", w.min_pair_gap))?;
    within_budget(t0, Duration::from_secs(10))?;
    Ok(format!("length {:.12} gap {:.9}", r.length, w.min_pair_gap))
}

fn criterion_3() -> Outcome {
    let t0 = Instant::now();
    let mut parts = Vec::new();
    for rho in [1.0, 1.5, 2.0] {
        let c = gallery::rounded_reuleaux(4.0, rho).map_err(|e| e.to_string())?;
        let r = c.report();
        check((r.length - 4.0 * PI).abs() <= LEN_TOL, || format!("rho {rho}: length {}", r.length))?;
        check((r.diameter - 4.0).abs() <= DIAM_TOL, || format!("rho {rho}: diameter {}", r.diameter))?;
        check(r.max_abs_kappa <= 1.0, || format!("rho {rho}: kappa {}", r.max_abs_kappa))?;
        parts.push(format!("rho {rho}: kappa {:.3}", r.max_abs_kappa));
    }
    within_budget(t0, Duration::from_secs(5))?;
    Ok(parts.join(", "))
}

fn criterion_4() -> Outcome {
    let t0 = Instant::now();
    let t2 = gallery::three_circle_border(0.2).map_err(|e| e.to_string())?;
    let fit = two_unit_disks_fit(&t2);
    check(fit.witness.is_none(), || "l = 0.2 admits two disks".into())?;
    let t0c = gallery::three_circle_border(0.0).map_err(|e| e.to_string())?;
    check((t0c.length() - 4.0 * PI).abs() <= THREE_LEN_TOL, || format!("length {}", t0c.length()))?;
    let gaps = match k_unit_disks_fit(&t0c, 3).map_err(|e| e.to_string())? {
        KFit::Found { witness } => {
            check(witness.clearance >= 1.0 - WITNESS_TOL, || format!("clearance {}", witness.clearance))?;
            let c = &witness.centers;
            vec![c[0].dist(c[1]), c[1].dist(c[2]), c[0].dist(c[2])]
        }
        KFit::NotFound { best_min_gap, .. } => return Err(format!("no three-disk witness, best gap {best_min_gap}")),
    };
    for g in &gaps {
        check(*g >= 2.0 - WITNESS_TOL && (g - 2.0).abs() <= 2.0 * H, || format!("gap {g}"))?;
    }
    within_budget(t0, Duration::from_secs(30))?;
    Ok(format!(
        "l=0.2 feasible diameter {:.4}; l=0 gaps {:.9} {:.9} {:.9}",
        fit.feasible_diameter, gaps[0], gaps[1], gaps[2]
    ))
}

fn criterion_5() -> Outcome {
    let t0 = Instant::now();
    let ls = [0.4, 0.2, 0.1, 0.01, 0.001];
    let mut lens = Vec::new();
    for l in ls {
        lens.push(gallery::three_circle_border(l).map_err(|e| e.to_string())?.length());
    }
    for w in lens.windows(2) {
        check(w[1] > w[0], || format!("not increasing: {lens:?}"))?;
    }
    let last = lens[lens.len() - 1];
    check((last - 4.0 * PI).abs() < LIMIT_TOL, || format!("l=0.001 length {last}"))?;
    check(lens.iter().all(|&v| v < 4.0 * PI), || format!("exceeds 4π: {lens:?}"))?;
    within_budget(t0, Duration::from_secs(1))?;
    Ok(format!("4π - length(0.001) = {:.3e}", 4.0 * PI - last))
}

fn criterion_6() -> Outcome {
    let t0 = Instant::now();
    let d = gallery::dumbbell(6.0, 4.8).map_err(|e| e.to_string())?;
    let w = two_unit_disks_fit(&d).witness.ok_or("no two-disk witness")?;
    let mut c = w.centers.clone();
    c.sort_by(|a, b| a.x.total_cmp(&b.x));
    check(c[0].dist(Point2::new(-3.0, 0.0)) <= 2.0 * H, || format!("left center {:?}", c[0]))?;
    check(c[1].dist(Point2::new(3.0, 0.0)) <= 2.0 * H, || format!("right center {:?}", c[1]))?;
    let k3 = k_unit_disks_fit(&d, 3).map_err(|e| e.to_string())?;
    let best = match k3 {
        KFit::NotFound { best_min_gap, .. } => best_min_gap,
        KFit::Found { witness } => return Err(format!("three disks found: {:?}", witness.centers)),
    };
    within_budget(t0, Duration::from_secs(30))?;
    Ok(format!(
        "centers ({:.6}, {:.6}) ({:.6}, {:.6}); k=3 best gap {best:.4}",
        c[0].x, c[0].y, c[1].x, c[1].y
    ))
}

/// Random admissible curves from a mix of segment counts and radius ranges.
fn random_corpus(count: usize, keep: impl Fn(&ClosedArcSpline) -> bool) -> Vec<ClosedArcSpline> {
    let samplers = [
        Sampler::default(),
        Sampler { radius_range: (1.0, 2.0), ..Sampler::default() },
        Sampler { radius_range: (1.0, 1.5), allow_concave: false, ..Sampler::default() },
    ];
    let mut out = Vec::new();
    let mut i = 0u64;
    while out.len() < count && i < 100 * count as u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(i);
        let n = 3 + (i as usize % 10);
        let sampler = samplers[i as usize % samplers.len()];
        if let Ok(c) = sampler.sample(n, &mut rng) {
            if keep(&c) {
                out.push(c);
            }
        }
        i += 1;
    }
    out
}

fn criterion_7() -> Outcome {
    let t0 = Instant::now();
    let corpus = random_corpus(100, |c| c.diameter().value >= 4.0);
    check(corpus.len() == 100, || format!("only {} curves drawn", corpus.len()))?;
    let mut constructed = 0;
    let mut worst_clear = f64::INFINITY;
    let mut worst_gap = f64::INFINITY;
    for (i, c) in corpus.iter().enumerate() {
        let tw = match theorem_witness(c) {
            Ok(tw) => tw,
            Err(GeomError::CounterexampleAlert(m)) => return Err(format!("curve {i}: counterexample alert: {m}")),
            Err(e) => return Err(format!("curve {i}: {e}")),
        };
        let w = &tw.witness;
        check(w.clearance >= 1.0 - WITNESS_TOL, || format!("curve {i}: clearance {}", w.clearance))?;
        check(w.min_pair_gap >= 2.0 - WITNESS_TOL, || format!("curve {i}: gap {}", w.min_pair_gap))?;
        worst_clear = worst_clear.min(w.clearance);
        worst_gap = worst_gap.min(w.min_pair_gap);
        if tw.route == puddle::moons::WitnessRoute::Construction {
            constructed += 1;
        }
    }
    within_budget(t0, Duration::from_secs(300))?;
    Ok(format!(
        "100 curves, {constructed} by construction, min clearance {worst_clear:.9}, min gap {worst_gap:.9}, 0 alerts"
    ))
}

fn gallery_corpus() -> Vec<(String, ClosedArcSpline)> {
    let mut v = Vec::new();
    let mut add = |name: String, c: puddle::Result<ClosedArcSpline>| v.push((name, c.unwrap()));
    add("circle(2)".into(), gallery::circle(2.0));
    add("circle(1)".into(), gallery::circle(1.0));
    add("stadium(2)".into(), gallery::stadium(2.0));
    add("stadium(0.5)".into(), gallery::stadium(0.5));
    add("dumbbell".into(), gallery::dumbbell(6.0, 4.8));
    for l in [0.0, 0.1, 0.2, 0.4] {
        add(format!("three-circle-border({l})"), gallery::three_circle_border(l));
    }
    for rho in [1.0, 1.5, 2.0] {
        add(format!("rounded-reuleaux(4, {rho})"), gallery::rounded_reuleaux(4.0, rho));
    }
    v
}

fn criterion_8() -> Outcome {
    let t0 = Instant::now();
    let mut corpus: Vec<ClosedArcSpline> = gallery_corpus().into_iter().map(|(_, c)| c).collect();
    corpus.extend(random_corpus(60, |_| true));
    let mut witnesses = 0;
    let mut min_diam = f64::INFINITY;
    for (i, c) in corpus.iter().enumerate() {
        if let Some(w) = two_unit_disks_fit(c).witness {
            witnesses += 1;
            let d = c.diameter().value;
            min_diam = min_diam.min(d);
            check(d >= 4.0 - CONVERSE_SLACK, || {
                format!("curve {i}: witness gap {} but diameter {d}", w.min_pair_gap)
            })?;
        }
    }
    Ok(format!(
        "{} curves, {witnesses} witnesses, smallest diameter with a witness {min_diam:.6} ({:.1?})",
        corpus.len(),
        t0.elapsed()
    ))
}

fn lemma_runs(c: &ClosedArcSpline, t: f64, label: &str) -> Result<Vec<String>, String> {
    let base = incircle_at(c, t).map_err(|e| e.to_string())?;
    let total = c.length();
    let spans: Vec<ArcSpan> = spans_between_contacts(&base, total);
    check(!spans.is_empty(), || format!("{label}: no spans"))?;
    let mut out = Vec::new();
    for span in spans {
        let run = lemma_supporting_point(c, span, &base).map_err(|e| format!("{label}: {e}"))?;
        let l = &run.span_lengths;
        for w in l.windows(2) {
            check(w[1] < w[0], || format!("{label}: span lengths not decreasing {l:?}"))?;
        }
        for w in l.windows(2).skip(1) {
            check(w[1] <= w[0] / 2.0 + EPS_ARC, || format!("{label}: no halving {l:?}"))?;
        }
        let s = supports_from_inside(c, run.q).map_err(|e| e.to_string())?;
        check(s == Support::Inside, || format!("{label}: q {} gives {s:?}", run.q))?;
        out.push(format!("{label} q={:.4} r={:.6} it={}", run.q, run.osculating.radius, run.iterations));
    }
    Ok(out)
}

fn criterion_9() -> Outcome {
    let t0 = Instant::now();
    let d = gallery::dumbbell(6.0, 4.8).map_err(|e| e.to_string())?;
    let s = gallery::stadium(2.0).map_err(|e| e.to_string())?;
    let t = gallery::three_circle_border(0.2).map_err(|e| e.to_string())?;
    let mut parts = lemma_runs(&d, seg_mid(&d, 1), "dumbbell")?;
    parts.extend(lemma_runs(&s, 1.0, "stadium")?);
    parts.extend(lemma_runs(&t, seg_mid(&t, 1), "three-circle")?);
    // Random curves whose lemma runs take several rounds.
    let mut deepest = 0;
    for (seed, n, wide) in [(4u64, 7, true), (9, 12, false), (127, 10, false)] {
        let sampler = if wide { Sampler::default() } else { Sampler { radius_range: (1.0, 2.0), ..Sampler::default() } };
        let c = sampler.sample(n, &mut ChaCha8Rng::seed_from_u64(seed)).map_err(|e| e.to_string())?;
        let total = c.length();
        for k in 0..20 {
            let t = total * k as f64 / 20.0;
            let base = incircle_at(&c, t).map_err(|e| e.to_string())?;
            for span in spans_between_contacts(&base, total) {
                let run = lemma_supporting_point(&c, span, &base).map_err(|e| format!("seed {seed}: {e}"))?;
                let l = &run.span_lengths;
                for w in l.windows(2) {
                    check(w[1] < w[0], || format!("seed {seed}: not decreasing {l:?}"))?;
                }
                for w in l.windows(2).skip(1) {
                    check(w[1] <= w[0] / 2.0 + EPS_ARC, || format!("seed {seed}: no halving {l:?}"))?;
                }
                let s = supports_from_inside(&c, run.q).map_err(|e| e.to_string())?;
                check(s == Support::Inside, || format!("seed {seed} t {t}: q {} gives {s:?}", run.q))?;
                deepest = deepest.max(run.iterations);
            }
        }
    }
    parts.push(format!("random curves: up to {deepest} rounds"));
    within_budget(t0, Duration::from_secs(10))?;
    Ok(parts.join("; "))
}

fn criterion_10() -> Outcome {
    let t0 = Instant::now();
    let cfg = SearchConfig {
        n_segments: 8,
        restarts: 20,
        rng_seed: 0,
        ..SearchConfig::new(Objective::MinLengthGivenDiameter)
    };
    let r = search(&cfg).map_err(|e| e.to_string())?;
    let v = r.objective_value.ok_or("no feasible curve")?;
    let target = 2.0 * PI + 4.0;
    check(r.feasible, || "infeasible".into())?;
    check((v - target).abs() <= SEARCH_REL * target, || format!("length {v}"))?;
    let rep = r.best_report.as_ref().ok_or("no report")?;
    check(rep.diameter >= 4.0 - 1e-9 && rep.simple && rep.max_abs_kappa <= 1.0 + 1e-9, || {
        format!("winner violates constraints: {rep:?}")
    })?;
    let first = t0.elapsed();

    let t1 = Instant::now();
    let cfg = SearchConfig {
        n_segments: 12,
        restarts: 20,
        rng_seed: 0,
        ..SearchConfig::new(Objective::MinDiameterGivenLength)
    };
    let r2 = search(&cfg).map_err(|e| e.to_string())?;
    let d = r2.objective_value.unwrap_or(f64::INFINITY);
    if d < 4.0 - CONJECTURE_MARGIN {
        let curve = r2.best_curve.as_ref().ok_or("no curve")?;
        let audit = counterexample_audit(curve);
        return Err(format!("diameter {d} below 4: audit {}", audit.verdict));
    }
    within_budget(t0, Duration::from_secs(600))?;
    Ok(format!(
        "shortest length {v:.6} vs {target:.6} ({:.3}% off, {first:.1?}); smallest diameter at length 4π {d:.6} ({:.1?})",
        100.0 * (v - target) / target,
        t1.elapsed()
    ))
}

fn criterion_11() -> Outcome {
    let t0 = Instant::now();
    let mut worst = (0.0f64, 0.0f64, 0.0f64);
    for (name, c) in gallery_corpus() {
        let len = c.length();
        let bl = brute_length(c.path(), 100_000);
        check((len - bl).abs() <= ORACLE_LEN_REL * len, || format!("{name}: length {len} vs {bl}"))?;
        let d = c.diameter().value;
        let bd = brute_diameter(c.path(), 10_000).0;
        check((d - bd).abs() <= ORACLE_DIAM, || format!("{name}: diameter {d} vs {bd}"))?;
        let mut ts: Vec<f64> = (0..c.path().segments().len()).map(|i| seg_mid(&c, i)).collect();
        ts.extend((0..5).map(|k| len * (k as f64 + 0.37) / 5.0));
        for t in ts {
            let r = incircle_at(&c, t).map_err(|e| format!("{name}: {e}"))?.radius();
            let br = brute_incircle_radius(&c, t, 100_000);
            check((r - br).abs() <= ORACLE_RADIUS, || format!("{name} at t {t}: incircle {r} vs {br}"))?;
            worst.2 = worst.2.max((r - br).abs());
        }
        worst.0 = worst.0.max((len - bl).abs() / len);
        worst.1 = worst.1.max((d - bd).abs());
    }
    within_budget(t0, Duration::from_secs(120))?;
    Ok(format!(
        "max rel length delta {:.2e}, max diameter delta {:.2e}, max incircle delta {:.2e}",
        worst.0, worst.1, worst.2
    ))
}

fn main() {
    let criteria: [(u32, fn() -> Outcome); 11] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
    ];
    let filter: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (n, f) in criteria {
        if !filter.is_empty() && !filter.contains(&n) {
            continue;
        }
        let t0 = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let el = t0.elapsed();
        match outcome {
            Ok(msg) => println!("criterion {n}: PASS ({el:.2?}) {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {n}: FAIL ({el:.2?}) {msg}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
