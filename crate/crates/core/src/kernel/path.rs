use std::f64::consts::{PI, TAU};
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use super::intersect;
use super::piece::Piece;
use super::point::{wrap_pi, wrap_tau, Circle, Point2};
use super::segment::Segment;
use crate::error::{GeomError, Result};
use crate::tol::ToleranceConfig;

/// Canonical curve interchange form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveJson {
    pub start: [f64; 2],
    pub heading: f64,
    pub segments: Vec<Segment>,
}

/// An arc-spline that is not yet known to be closed or simple.
#[derive(Debug, Clone)]
pub struct ArcPath {
    start: Point2,
    heading: f64,
    segments: Vec<Segment>,
    pieces: Vec<Piece>,
    length: f64,
}

/// Paths are equal when their defining data are; derived pieces follow.
impl PartialEq for ArcPath {
    fn eq(&self, other: &Self) -> bool {
        self.start == other.start && self.heading == other.heading && self.segments == other.segments
    }
}

impl ArcPath {
    pub fn new(start: Point2, heading: f64, segments: Vec<Segment>) -> Result<Self> {
        if !start.is_finite() || !heading.is_finite() {
            return Err(GeomError::validation("finite start", None, "start point or heading is not finite"));
        }
        if segments.is_empty() {
            return Err(GeomError::validation("non-empty", None, "no segments"));
        }
        for (i, s) in segments.iter().enumerate() {
            s.check(Some(i))?;
        }
        let mut pieces = Vec::with_capacity(segments.len());
        let mut p = start;
        let mut h = heading;
        let mut t = 0.0;
        for s in &segments {
            let piece = Piece::new(p, h, s.kappa, s.len, t);
            p = piece.p1;
            h = piece.h1();
            t += s.len;
            pieces.push(piece);
        }
        Ok(Self {
            start,
            heading,
            segments,
            pieces,
            length: t,
        })
    }

    pub fn from_json(json: &CurveJson) -> Result<Self> {
        Self::new(json.start.into(), json.heading, json.segments.clone())
    }

    pub fn to_json(&self) -> CurveJson {
        CurveJson {
            start: self.start.into(),
            heading: self.heading,
            segments: self.segments.clone(),
        }
    }

    pub fn start(&self) -> Point2 {
        self.start
    }

    pub fn heading(&self) -> f64 {
        self.heading
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub(crate) fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    /// Total arclength: the plain sum of segment lengths.
    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn max_abs_curvature(&self) -> f64 {
        self.segments.iter().map(|s| s.kappa.abs()).fold(0.0, f64::max)
    }

    /// Total signed turning, Σ kappa·len.
    pub fn turning(&self) -> f64 {
        self.segments.iter().map(Segment::turning).sum()
    }

    pub fn end_point(&self) -> Point2 {
        self.pieces.last().map(|p| p.p1).unwrap_or(self.start)
    }

    pub fn end_heading(&self) -> f64 {
        self.pieces.last().map(|p| p.h1()).unwrap_or(self.heading)
    }

    /// Start of each segment, in order.
    pub fn knots(&self) -> impl Iterator<Item = Point2> + '_ {
        self.pieces.iter().map(|p| p.p0)
    }

    /// Arclength offset at which each segment starts.
    pub fn knot_params(&self) -> impl Iterator<Item = f64> + '_ {
        self.pieces.iter().map(|p| p.t0)
    }

    /// Distance between end and start points, and the heading mismatch modulo 2π.
    pub fn closure_gap(&self) -> (f64, f64) {
        (
            self.end_point().dist(self.start),
            wrap_pi(self.end_heading() - self.heading).abs(),
        )
    }

    pub(crate) fn piece_index(&self, t: f64) -> usize {
        let i = self.pieces.partition_point(|p| p.t0 <= t);
        i.saturating_sub(1)
    }

    fn check_param(&self, t: f64) -> Result<()> {
        if !(t >= 0.0 && t < self.length) {
            return Err(GeomError::Parameter(format!(
                "arclength {t} outside [0, {})",
                self.length
            )));
        }
        Ok(())
    }

    /// Point, heading and curvature at arclength `t`.
    pub fn evaluate(&self, t: f64) -> Result<(Point2, f64, f64)> {
        self.check_param(t)?;
        Ok(self.eval_unchecked(t))
    }

    /// Evaluation that clamps `t` into `[0, length]`.
    pub(crate) fn eval_unchecked(&self, t: f64) -> (Point2, f64, f64) {
        let t = t.clamp(0.0, self.length);
        let i = self.piece_index(t);
        let piece = &self.pieces[i];
        let s = (t - piece.t0).clamp(0.0, piece.len);
        (piece.point_at(s), piece.heading_at(s), piece.kappa)
    }

    pub fn point_at(&self, t: f64) -> Point2 {
        self.eval_unchecked(self.wrap_param(t)).0
    }

    /// Maps any arclength onto `[0, length)` cyclically.
    pub fn wrap_param(&self, t: f64) -> f64 {
        let w = t.rem_euclid(self.length);
        if w >= self.length {
            0.0
        } else {
            w
        }
    }

    /// Osculating circle at `t`, `None` on straight segments.
    pub fn osculating_circle_at(&self, t: f64) -> Result<Option<Circle>> {
        let (p, h, k) = self.evaluate(t)?;
        if k == 0.0 {
            return Ok(None);
        }
        let center = p + Point2::from_angle(h).perp() * (1.0 / k);
        Ok(Some(Circle {
            center,
            radius: 1.0 / k.abs(),
        }))
    }

    pub fn bbox(&self) -> (Point2, Point2) {
        let mut lo = Point2::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in &self.pieces {
            let (a, b) = p.bbox();
            lo = Point2::new(lo.x.min(a.x), lo.y.min(a.y));
            hi = Point2::new(hi.x.max(b.x), hi.y.max(b.y));
        }
        (lo, hi)
    }

    pub fn bbox_diagonal(&self) -> f64 {
        let (lo, hi) = self.bbox();
        lo.dist(hi)
    }

    /// The same closed loop traversed backwards from the same start point.
    pub fn reversed(&self) -> Result<Self> {
        let segments = self
            .segments
            .iter()
            .rev()
            .map(|s| Segment {
                kappa: -s.kappa,
                len: s.len,
            })
            .collect();
        Self::new(self.start, wrap_tau(self.heading + PI), segments)
    }

    /// Uniform scaling about the origin.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        let segments = self.segments.iter().map(|s| s.scaled(factor)).collect();
        Self::new(self.start * factor, self.heading, segments)
    }

    /// Rigid motion: rotation by `angle` about the origin, then translation.
    pub fn transformed(&self, angle: f64, shift: Point2) -> Result<Self> {
        let (s, c) = angle.sin_cos();
        let p = self.start;
        let rotated = Point2::new(c * p.x - s * p.y, s * p.x + c * p.y);
        Self::new(rotated + shift, self.heading + angle, self.segments.clone())
    }

    /// Cyclic relabeling so that segment `first` comes first.
    pub fn rotated_start(&self, first: usize) -> Result<Self> {
        let n = self.segments.len();
        let first = first % n;
        let piece = &self.pieces[first];
        let segments = (0..n).map(|k| self.segments[(first + k) % n]).collect();
        Self::new(piece.p0, piece.h0, segments)
    }
}

/// A validated simple closed arc-spline, oriented counterclockwise.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedArcSpline {
    path: ArcPath,
    tol: ToleranceConfig,
}

impl Deref for ClosedArcSpline {
    type Target = ArcPath;
    fn deref(&self) -> &ArcPath {
        &self.path
    }
}

impl Serialize for ClosedArcSpline {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.path.to_json().serialize(s)
    }
}

impl ClosedArcSpline {
    pub fn new(start: Point2, heading: f64, segments: Vec<Segment>) -> Result<Self> {
        Self::from_path(ArcPath::new(start, heading, segments)?, ToleranceConfig::default())
    }

    pub fn from_json(json: &CurveJson, tol: ToleranceConfig) -> Result<Self> {
        Self::from_path(ArcPath::from_json(json)?, tol)
    }

    /// Validates closure, total turning and simplicity. Clockwise input is
    /// reversed so that every accepted curve turns by +2π.
    pub fn from_path(path: ArcPath, tol: ToleranceConfig) -> Result<Self> {
        tol.validate()?;
        check_closure(&path, &tol)?;
        let turning = path.turning();
        let path = if turning < 0.0 { path.reversed()? } else { path };
        if let Some((i, j)) = intersect::first_crossing(&path, tol.tol_geom) {
            return Err(GeomError::validation(
                "simplicity",
                Some(i),
                format!("segment {i} meets segment {j}"),
            ));
        }
        Ok(Self { path, tol })
    }

    pub fn with_tol(mut self, tol: ToleranceConfig) -> Self {
        self.tol = tol;
        self
    }

    pub fn tol(&self) -> &ToleranceConfig {
        &self.tol
    }

    pub fn path(&self) -> &ArcPath {
        &self.path
    }

    pub fn into_path(self) -> ArcPath {
        self.path
    }

    /// Inward (left) unit normal at `t`.
    pub fn inward_normal(&self, t: f64) -> Point2 {
        let (_, h, _) = self.path.eval_unchecked(self.path.wrap_param(t));
        Point2::from_angle(h).perp()
    }

    /// Curvature at `t` (of the segment containing it).
    pub fn kappa_at(&self, t: f64) -> f64 {
        self.path.eval_unchecked(self.path.wrap_param(t)).2
    }

    /// Cyclic forward distance from `a` to `b`.
    pub fn forward(&self, a: f64, b: f64) -> f64 {
        self.path.wrap_param(b - a)
    }
}

pub(crate) fn check_closure(path: &ArcPath, tol: &ToleranceConfig) -> Result<()> {
    let n = path.segments().len();
    let (gap, dh) = path.closure_gap();
    if gap > tol.tol_close {
        return Err(GeomError::validation(
            "closure",
            Some(n - 1),
            format!("end point misses start by {gap:e}"),
        ));
    }
    if dh > tol.tol_close {
        return Err(GeomError::validation(
            "closure",
            Some(n - 1),
            format!("end heading misses start heading by {dh:e}"),
        ));
    }
    let turning = path.turning();
    if (turning.abs() - TAU).abs() > tol.tol_close {
        return Err(GeomError::validation(
            "turning number",
            None,
            format!("total turning {turning} is not ±2π"),
        ));
    }
    Ok(())
}

/// A cyclic parameter interval of a closed curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArcSpan {
    pub t_lo: f64,
    pub t_hi: f64,
}

impl ArcSpan {
    pub fn new(t_lo: f64, t_hi: f64, total: f64) -> Result<Self> {
        let span = Self { t_lo, t_hi };
        if !(t_lo >= 0.0 && t_lo < total && t_hi >= 0.0 && t_hi < total) {
            return Err(GeomError::InvalidSpan {
                t_lo,
                t_hi,
                detail: format!("endpoints must lie in [0, {total})"),
            });
        }
        if span.length(total) <= 0.0 {
            return Err(GeomError::InvalidSpan {
                t_lo,
                t_hi,
                detail: "empty span".into(),
            });
        }
        Ok(span)
    }

    pub fn length(&self, total: f64) -> f64 {
        (self.t_hi - self.t_lo).rem_euclid(total)
    }

    /// Parameter at fraction `f` of the span.
    pub fn at(&self, f: f64, total: f64) -> f64 {
        (self.t_lo + f * self.length(total)).rem_euclid(total)
    }

    /// Offset of `t` from `t_lo` if `t` lies in the closed span.
    pub fn offset_of(&self, t: f64, total: f64) -> Option<f64> {
        let off = (t - self.t_lo).rem_euclid(total);
        (off <= self.length(total)).then_some(off)
    }
}
