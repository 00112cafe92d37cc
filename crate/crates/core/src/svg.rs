//! SVG rendering with native arc commands.
//!
//! World coordinates are y-up and mapped to y-down SVG with a margin of 5%
//! of the bounding box on every side. Output is byte-identical for
//! identical inputs.

use std::f64::consts::PI;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::kernel::piece::Shape;
use crate::kernel::{ArcPath, Circle, Point2};

/// Geometry drawn above the curve. `labels[i]` is placed next to
/// `points[i]`; labels without a point are stacked in the top-left corner.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Overlay {
    #[serde(default)]
    pub circles: Vec<Circle>,
    #[serde(default)]
    pub points: Vec<Point2>,
    #[serde(default)]
    pub labels: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RenderSpec {
    pub width_px: u32,
    pub height_px: u32,
    pub stroke: f64,
    #[serde(default)]
    pub overlays: Vec<Overlay>,
}

impl Default for RenderSpec {
    fn default() -> Self {
        Self {
            width_px: 600,
            height_px: 600,
            stroke: 2.0,
            overlays: Vec::new(),
        }
    }
}

impl RenderSpec {
    pub fn validate(&self) -> Result<()> {
        if self.width_px == 0 || self.height_px == 0 {
            return Err(GeomError::Parameter("image dimensions must be positive".into()));
        }
        if !(self.stroke.is_finite() && self.stroke > 0.0) {
            return Err(GeomError::Parameter(format!("stroke must be positive, got {}", self.stroke)));
        }
        for o in &self.overlays {
            let finite = o.circles.iter().all(|c| c.center.is_finite() && c.radius.is_finite() && c.radius > 0.0)
                && o.points.iter().all(|p| p.is_finite());
            if !finite {
                return Err(GeomError::Parameter("overlay geometry must be finite".into()));
            }
        }
        Ok(())
    }

    pub fn with_overlay(mut self, overlay: Overlay) -> Self {
        self.overlays.push(overlay);
        self
    }
}

struct Frame {
    lo: Point2,
    scale: f64,
    off: Point2,
    height: f64,
}

impl Frame {
    fn new(lo: Point2, hi: Point2, spec: &RenderSpec) -> Self {
        let size = (hi - lo).norm().max(1e-9);
        let m = 0.05 * size;
        let lo = Point2::new(lo.x - m, lo.y - m);
        let hi = Point2::new(hi.x + m, hi.y + m);
        let (w, h) = (spec.width_px as f64, spec.height_px as f64);
        let scale = (w / (hi.x - lo.x)).min(h / (hi.y - lo.y));
        let off = Point2::new(
            0.5 * (w - scale * (hi.x - lo.x)),
            0.5 * (h - scale * (hi.y - lo.y)),
        );
        Self { lo, scale, off, height: h }
    }

    fn map(&self, p: Point2) -> (f64, f64) {
        let x = (p.x - self.lo.x) * self.scale + self.off.x;
        let y = self.height - ((p.y - self.lo.y) * self.scale + self.off.y);
        (x, y)
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.4}");
    if s == "-0.0000" {
        "0.0000".into()
    } else {
        s
    }
}

fn path_data(path: &ArcPath, frame: &Frame) -> String {
    let mut d = String::new();
    let (x, y) = frame.map(path.start());
    let _ = write!(d, "M {} {}", num(x), num(y));
    for piece in path.pieces() {
        match piece.shape {
            Shape::Line { .. } => {
                let (x, y) = frame.map(piece.p1);
                let _ = write!(d, " L {} {}", num(x), num(y));
            }
            Shape::Arc { radius, .. } => {
                let turn = piece.kappa * piece.len;
                let parts = if turn.abs() > PI { 2 } else { 1 };
                let r = num(radius * frame.scale);
                let sweep = if piece.kappa > 0.0 { 1 } else { 0 };
                for k in 1..=parts {
                    let end = piece.point_at(piece.len * k as f64 / parts as f64);
                    let (x, y) = frame.map(end);
                    let _ = write!(d, " A {r} {r} 0 0 {sweep} {} {}", num(x), num(y));
                }
            }
        }
    }
    d.push_str(" Z");
    d
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Renders a curve and its overlays as a standalone SVG document.
pub fn render(path: &ArcPath, spec: &RenderSpec) -> Result<String> {
    spec.validate()?;
    let (mut lo, mut hi) = path.bbox();
    for o in &spec.overlays {
        for c in &o.circles {
            lo = Point2::new(lo.x.min(c.center.x - c.radius), lo.y.min(c.center.y - c.radius));
            hi = Point2::new(hi.x.max(c.center.x + c.radius), hi.y.max(c.center.y + c.radius));
        }
        for p in &o.points {
            lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
        }
    }
    let frame = Frame::new(lo, hi, spec);
    let sw = num(spec.stroke);
    let thin = num(0.6 * spec.stroke);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = spec.width_px,
        h = spec.height_px
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"<path d="{}" fill="none" stroke="black" stroke-width="{sw}" stroke-linejoin="round"/>"#,
        path_data(path, &frame)
    );
    let mut stacked = 0;
    for o in &spec.overlays {
        for c in &o.circles {
            let (x, y) = frame.map(c.center);
            let _ = writeln!(
                out,
                r#"<circle cx="{}" cy="{}" r="{}" fill="none" stroke="steelblue" stroke-width="{thin}"/>"#,
                num(x),
                num(y),
                num(c.radius * frame.scale)
            );
        }
        for p in &o.points {
            let (x, y) = frame.map(*p);
            let _ = writeln!(out, r#"<circle cx="{}" cy="{}" r="{}" fill="firebrick"/>"#, num(x), num(y), num(1.5 * spec.stroke));
        }
        for (i, label) in o.labels.iter().enumerate() {
            let (x, y) = match o.points.get(i) {
                Some(p) => {
                    let (x, y) = frame.map(*p);
                    (x + 3.0 * spec.stroke, y - 3.0 * spec.stroke)
                }
                None => {
                    stacked += 1;
                    (8.0, 16.0 * stacked as f64)
                }
            };
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}" font-family="sans-serif" font-size="14">{}</text>"#,
                num(x),
                num(y),
                escape(label)
            );
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
