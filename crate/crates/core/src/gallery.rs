//! Constructors for the extremal and equality-case curves.
//!
//! Every constructor returns a validated, counterclockwise
//! [`ClosedArcSpline`] whose junctions are tangent-continuous.
//!
//! `three_circle_border(l)` is defined for `0 <= l < THREE_CIRCLE_L_MAX`:
//! the connector arcs subtend `π - 2·acos((2 - l)/4)` at their centers, which
//! vanishes at `l = 2` where the three vertex circles coincide.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::kernel::{ArcPath, ClosedArcSpline, Point2, Segment};
use crate::tol::ToleranceConfig;

/// Upper end (exclusive) of the side-defect parameter of [`three_circle_border`].
pub const THREE_CIRCLE_L_MAX: f64 = 2.0;

pub const NAMES: &[&str] = &[
    "circle",
    "stadium",
    "dumbbell",
    "three-circle-border",
    "rounded-reuleaux",
];

fn param_err(msg: impl Into<String>) -> GeomError {
    GeomError::Parameter(msg.into())
}

fn build(start: Point2, heading: f64, segments: Vec<Segment>) -> Result<ClosedArcSpline> {
    ClosedArcSpline::from_path(ArcPath::new(start, heading, segments)?, ToleranceConfig::default())
}

/// Circle of radius `r` centered at the origin, as two half arcs starting at `(r, 0)`.
pub fn circle(r: f64) -> Result<ClosedArcSpline> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(param_err(format!("circle radius must be positive, got {r}")));
    }
    let half = Segment::new(1.0 / r, PI * r)?;
    build(Point2::new(r, 0.0), FRAC_PI_2, vec![half, half])
}

/// Two unit semicircles centered at `(0, 0)` and `(a, 0)` joined by straight
/// segments of length `a`. `a = 0` gives the unit circle.
pub fn stadium(a: f64) -> Result<ClosedArcSpline> {
    if !(a >= 0.0 && a.is_finite()) {
        return Err(param_err(format!("stadium straight length must be >= 0, got {a}")));
    }
    let cap = Segment::new(1.0, PI)?;
    let segments = if a == 0.0 {
        vec![cap, cap]
    } else {
        let line = Segment::line(a)?;
        vec![line, cap, line, cap]
    };
    build(Point2::new(0.0, -1.0), 0.0, segments)
}

/// Two unit lobes centered at `(±d/2, 0)` joined above and below by concave
/// arcs of radius `big_r`, each externally tangent to both lobes.
pub fn dumbbell(d: f64, big_r: f64) -> Result<ClosedArcSpline> {
    if !(d > 2.0) {
        return Err(param_err(format!("dumbbell needs d > 2, got {d}")));
    }
    if !(big_r >= 1.0) {
        return Err(param_err(format!("dumbbell needs R >= 1, got {big_r}")));
    }
    let half = d / 2.0;
    if !(half * half < 1.0 + 2.0 * big_r) {
        return Err(param_err(format!(
            "dumbbell needs d²/4 < 1 + 2R so the connectors do not meet (d = {d}, R = {big_r})"
        )));
    }
    let yc = ((1.0 + big_r).powi(2) - half * half).sqrt();
    // Connector half-angle at its own center, and the lobe contact angle.
    let beta = half.atan2(yc);
    let alpha = FRAC_PI_2 + beta;
    let lobe_half = Segment::new(1.0, alpha)?;
    let lobe = Segment::new(1.0, 2.0 * alpha)?;
    let connector = Segment::new(-1.0 / big_r, 2.0 * beta * big_r)?;
    build(
        Point2::new(half + 1.0, 0.0),
        FRAC_PI_2,
        vec![lobe_half, connector, lobe, connector, lobe_half],
    )
}

/// Convex unit arcs around the vertices of an equilateral triangle of side
/// `2 - l`, joined by concave unit arcs whose circles touch two vertex
/// circles externally. The first vertex sits at the origin and the second on
/// the positive x axis.
///
/// At `l = 0` the vertex arcs are semicircles and the connectors span 60°,
/// for a total length of exactly 4π.
pub fn three_circle_border(l: f64) -> Result<ClosedArcSpline> {
    if !(0.0..THREE_CIRCLE_L_MAX).contains(&l) {
        return Err(param_err(format!(
            "three-circle border needs 0 <= l < {THREE_CIRCLE_L_MAX}, got {l}"
        )));
    }
    let side = 2.0 - l;
    let phi = (side / 4.0).acos();
    let vertex = Segment::new(1.0, 5.0 * PI / 3.0 - 2.0 * phi)?;
    let connector = Segment::new(-1.0, PI - 2.0 * phi)?;
    let start_angle = PI / 3.0 + phi;
    build(
        Point2::from_angle(start_angle),
        start_angle + FRAC_PI_2,
        [vertex, connector].repeat(3),
    )
}

/// Closed-form length of [`three_circle_border`].
pub fn three_circle_border_length(l: f64) -> f64 {
    8.0 * PI - 12.0 * ((2.0 - l) / 4.0).acos()
}

/// Vertices of the triangle used by [`three_circle_border`].
pub fn three_circle_vertices(l: f64) -> [Point2; 3] {
    let s = 2.0 - l;
    [
        Point2::ORIGIN,
        Point2::new(s, 0.0),
        Point2::new(s / 2.0, s * 3f64.sqrt() / 2.0),
    ]
}

/// Reuleaux triangle of width `width - 2·rho`, offset outward by `rho`:
/// three corner arcs of radius `rho` and three arcs of radius `width - rho`,
/// each spanning 60°. Constant width `width`, centered at the origin.
///
/// Requires `1 <= rho <= width/2` so that curvature stays at most one.
pub fn rounded_reuleaux(width: f64, rho: f64) -> Result<ClosedArcSpline> {
    if !(rho >= 1.0 && rho <= width / 2.0) {
        return Err(param_err(format!(
            "rounded Reuleaux with curvature at most 1 needs 1 <= rho <= width/2, got rho = {rho}, width = {width}"
        )));
    }
    rounded_reuleaux_unbounded(width, rho)
}

/// [`rounded_reuleaux`] without the curvature bound: `0 < rho <= width/2`.
pub fn rounded_reuleaux_unbounded(width: f64, rho: f64) -> Result<ClosedArcSpline> {
    if !(width > 0.0 && width.is_finite() && rho > 0.0 && rho <= width / 2.0) {
        return Err(param_err(format!(
            "rounded Reuleaux needs 0 < rho <= width/2, got rho = {rho}, width = {width}"
        )));
    }
    let side = width - 2.0 * rho;
    let v0 = Point2::new(0.0, side / 3f64.sqrt());
    let corner = Segment::new(1.0 / rho, rho * PI / 3.0)?;
    let far = Segment::new(1.0 / (width - rho), (width - rho) * PI / 3.0)?;
    build(
        v0 + Point2::from_angle(PI / 3.0) * rho,
        PI / 3.0 + FRAC_PI_2,
        [corner, far].repeat(3),
    )
}

/// Result of replacing one arc of curvature ±1/3 by three unit arcs.
#[derive(Debug, Clone, Serialize)]
pub struct Exchange {
    pub curve: ClosedArcSpline,
    /// Turning angles of the three inserted arcs (outer, middle, outer).
    pub angles: [f64; 3],
    pub length_before: f64,
    pub length_after: f64,
}

impl Exchange {
    pub fn length_delta(&self) -> f64 {
        self.length_after - self.length_before
    }
}

/// Chord length of unit arcs turning `+a`, `-(2a - turn)`, `+a`.
fn triple_chord(a: f64, turn: f64) -> f64 {
    let segs = [(1.0, a), (-1.0, 2.0 * a - turn), (1.0, a)];
    let mut p = Point2::ORIGIN;
    let mut h = 0.0;
    for (k, s) in segs {
        let (q, hh) = crate::kernel::advance(p, h, k, s);
        p = q;
        h = hh;
    }
    p.norm()
}

/// Replaces segment `seg_index` (curvature ±1/3) by three arcs of curvature
/// ±1 with signs (+, −, +) relative to the original, matching both endpoints
/// and both end headings. The replacement is symmetric about the arc's
/// bisector; its outer angle is found by bisection on the chord length.
pub fn arc_exchange(curve: &ClosedArcSpline, seg_index: usize) -> Result<Exchange> {
    let segs = curve.segments();
    let seg = *segs
        .get(seg_index)
        .ok_or_else(|| param_err(format!("segment index {seg_index} out of range")))?;
    let tol = *curve.tol();
    if (seg.kappa.abs() - 1.0 / 3.0).abs() > tol.tol_geom {
        return Err(param_err(format!(
            "segment {seg_index} has curvature {}, exchange needs ±1/3",
            seg.kappa
        )));
    }
    let sign = seg.kappa.signum();
    let turn = seg.turning().abs();
    let target = seg.len * crate::kernel::sinc(0.5 * turn);

    // Outer angle a >= turn/2 keeps the middle arc non-negative.
    let lo_start = 0.5 * turn;
    let steps = 400;
    let hi_limit = PI;
    let f = |a: f64| triple_chord(a, turn) - target;
    let mut bracket = None;
    let mut prev = lo_start;
    for i in 1..=steps {
        let a = lo_start + (hi_limit - lo_start) * i as f64 / steps as f64;
        if f(prev) <= 0.0 && f(a) >= 0.0 {
            bracket = Some((prev, a));
            break;
        }
        prev = a;
    }
    let (mut lo, mut hi) = bracket.ok_or_else(|| {
        GeomError::Construction(format!(
            "no three-arc interpolation for segment {seg_index} (chord {target})"
        ))
    })?;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let a = 0.5 * (lo + hi);
    let b = 2.0 * a - turn;
    let mut new_segs = Vec::with_capacity(segs.len() + 2);
    new_segs.extend_from_slice(&segs[..seg_index]);
    new_segs.push(Segment::new(sign, a)?);
    if b > 0.0 {
        new_segs.push(Segment::new(-sign, b)?);
    }
    new_segs.push(Segment::new(sign, a)?);
    new_segs.extend_from_slice(&segs[seg_index + 1..]);
    let path = ArcPath::new(curve.start(), curve.heading(), new_segs)?;
    let out = ClosedArcSpline::from_path(path, tol).map_err(|e| {
        GeomError::Construction(format!("exchanged curve failed validation: {e}"))
    })?;
    if out.max_abs_curvature() > 1.0 + tol.tol_geom {
        return Err(GeomError::Construction("exchanged curve exceeds curvature 1".into()));
    }
    Ok(Exchange {
        length_before: curve.length(),
        length_after: out.length(),
        angles: [a, b, a],
        curve: out,
    })
}

/// Named constructor call, as used by the command line.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct GalleryParams {
    pub name: String,
    pub params: BTreeMap<String, f64>,
}

impl GalleryParams {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            params: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: f64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    fn get(&self, key: &str, default: f64) -> f64 {
        self.params.get(key).copied().unwrap_or(default)
    }

    fn reject_unknown(&self, known: &[&str]) -> Result<()> {
        match self.params.keys().find(|k| !known.contains(&k.as_str())) {
            Some(k) => Err(param_err(format!(
                "{} takes parameters {:?}, got {k}",
                self.name, known
            ))),
            None => Ok(()),
        }
    }

    /// Builds the named curve with defaults for missing parameters.
    pub fn build(&self) -> Result<ClosedArcSpline> {
        match self.name.as_str() {
            "circle" => {
                self.reject_unknown(&["r"])?;
                circle(self.get("r", 2.0))
            }
            "stadium" => {
                self.reject_unknown(&["a"])?;
                stadium(self.get("a", 2.0))
            }
            "dumbbell" => {
                self.reject_unknown(&["d", "R"])?;
                dumbbell(self.get("d", 6.0), self.get("R", 4.8))
            }
            "three-circle-border" => {
                self.reject_unknown(&["l"])?;
                three_circle_border(self.get("l", 0.2))
            }
            "rounded-reuleaux" => {
                self.reject_unknown(&["width", "rho"])?;
                rounded_reuleaux(self.get("width", 4.0), self.get("rho", 1.0))
            }
            other => Err(param_err(format!(
                "unknown gallery curve {other:?}; available: {}",
                NAMES.join(", ")
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::TAU;

    use super::*;

    const EPS: f64 = 1e-12;

    fn g1_continuous(c: &ClosedArcSpline) -> bool {
        let pieces = c.pieces();
        (0..pieces.len()).all(|i| {
            let a = &pieces[i];
            let b = &pieces[(i + 1) % pieces.len()];
            let dh = crate::kernel::wrap_pi(a.h1() - b.h0).abs();
            dh <= 1e-9 && a.p1.dist(b.p0) <= 1e-9
        })
    }

    fn all_defaults() -> Vec<ClosedArcSpline> {
        NAMES.iter().map(|n| GalleryParams::new(*n).build().unwrap()).collect()
    }

    #[test]
    fn circles() {
        let c = circle(2.0).unwrap();
        assert!((c.length() - 4.0 * PI).abs() < EPS);
        assert!((c.diameter().value - 4.0).abs() < EPS);
        assert_eq!(c.max_abs_curvature(), 0.5);
        let u = circle(1.0).unwrap();
        assert!((u.length() - TAU).abs() < EPS && (u.diameter().value - 2.0).abs() < EPS);
        assert!(circle(0.0).is_err() && circle(-1.0).is_err());
    }

    #[test]
    fn stadiums() {
        let s = stadium(2.0).unwrap();
        assert!((s.length() - (TAU + 4.0)).abs() < EPS);
        assert!((s.diameter().value - 4.0).abs() < EPS);
        let z = stadium(0.0).unwrap();
        assert!((z.length() - TAU).abs() < EPS);
        assert!(stadium(-0.5).is_err());
    }

    #[test]
    fn dumbbell_shape() {
        let d = dumbbell(6.0, 4.8).unwrap();
        assert_eq!(d.max_abs_curvature(), 1.0);
        assert!((d.diameter().value - 8.0).abs() < EPS);
        // Region oracle (disk unions): perimeter 18.895274 at 1e-7.
        assert!((d.length() - 18.895274).abs() < 1e-6);
        assert!(dumbbell(2.0, 4.8).is_err());
        assert!(dumbbell(6.0, 0.5).is_err());
        match dumbbell(20.0, 4.8) {
            Err(GeomError::Parameter(m)) => assert!(m.contains("d²/4 < 1 + 2R")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn three_circle_border_family() {
        let z = three_circle_border(0.0).unwrap();
        assert!((z.length() - 4.0 * PI).abs() < 1e-12);
        assert!((z.diameter().value - 4.0).abs() < 1e-12);
        let mut prev = 0.0;
        for l in [0.4, 0.2, 0.1, 0.01, 0.001] {
            let c = three_circle_border(l).unwrap();
            assert!((c.length() - three_circle_border_length(l)).abs() < 1e-12);
            assert!(c.length() > prev);
            assert_eq!(c.max_abs_curvature(), 1.0);
            prev = c.length();
        }
        // Region oracle perimeters.
        for (l, want) in [(0.4, 11.2213875), (0.2, 11.8843694), (0.1, 12.2227537)] {
            assert!((three_circle_border(l).unwrap().length() - want).abs() < 1e-6);
        }
        assert!((three_circle_border(0.001).unwrap().length() - 4.0 * PI).abs() < 1e-2);
        assert!(three_circle_border(-0.1).is_err());
        assert!(three_circle_border(THREE_CIRCLE_L_MAX).is_err());
    }

    #[test]
    fn three_circle_vertex_circles_touch_the_border() {
        let l = 0.2;
        let c = three_circle_border(l).unwrap();
        for v in three_circle_vertices(l) {
            assert!((c.signed_distance(v) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn reuleaux_barbier() {
        for i in 0..=10 {
            let rho = 1.0 + 0.1 * i as f64;
            let c = rounded_reuleaux(4.0, rho).unwrap();
            assert!((c.length() - 4.0 * PI).abs() < 1e-9, "rho {rho}");
            assert!((c.diameter().value - 4.0).abs() < 1e-9, "rho {rho}");
            assert!(c.max_abs_curvature() <= 1.0 / rho + EPS);
        }
        let r1 = rounded_reuleaux(4.0, 1.0).unwrap();
        assert!(r1.segments().iter().any(|s| (s.kappa - 1.0 / 3.0).abs() < EPS));
        let r2 = rounded_reuleaux(4.0, 2.0).unwrap();
        assert!(r2.pieces().iter().all(|p| p.circle().unwrap().0.norm() < 1e-12));
        assert!(rounded_reuleaux(4.0, 0.5).is_err());
        assert!(rounded_reuleaux_unbounded(4.0, 0.5).is_ok());
        assert!(rounded_reuleaux(4.0, 2.5).is_err());
    }

    #[test]
    fn every_default_is_valid_and_g1() {
        for c in all_defaults() {
            assert!(c.report().simple);
            assert!((c.turning() - TAU).abs() < 1e-9);
            assert!(g1_continuous(&c));
        }
    }

    #[test]
    fn exchange_one_and_all_far_arcs() {
        let base = rounded_reuleaux(4.0, 1.0).unwrap();
        let one = arc_exchange(&base, 1).unwrap();
        assert!(one.curve.max_abs_curvature() <= 1.0);
        assert!(one.curve.report().simple);
        assert!(g1_continuous(&one.curve));
        let mut cur = base.clone();
        let mut idx = 1;
        for _ in 0..3 {
            let ex = arc_exchange(&cur, idx).unwrap();
            cur = ex.curve;
            idx += 4;
        }
        assert_eq!(cur.segments().len(), 12);
        assert!((cur.length() - 4.0 * PI).abs() < 1e-6);
    }

    #[test]
    fn exchange_rejects_other_curvatures() {
        let c = circle(2.0).unwrap();
        assert!(matches!(arc_exchange(&c, 0), Err(GeomError::Parameter(_))));
        assert!(matches!(arc_exchange(&c, 9), Err(GeomError::Parameter(_))));
    }

    #[test]
    fn params_dispatch() {
        let s = GalleryParams::new("stadium").with("a", 1.0).build().unwrap();
        assert!((s.length() - (TAU + 2.0)).abs() < EPS);
        assert!(GalleryParams::new("circle").with("a", 1.0).build().is_err());
        match GalleryParams::new("moon").build() {
            Err(GeomError::Parameter(m)) => assert!(m.contains("rounded-reuleaux")),
            other => panic!("{other:?}"),
        }
    }
}
