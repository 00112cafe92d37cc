use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use super::point::Point2;
use crate::error::{GeomError, Result};

/// One constant-curvature piece of an arc-spline.
///
/// `kappa` is signed: positive turns left along the direction of travel,
/// zero is a straight line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub kappa: f64,
    pub len: f64,
}

impl Segment {
    pub fn new(kappa: f64, len: f64) -> Result<Self> {
        let s = Self { kappa, len };
        s.check(None)?;
        Ok(s)
    }

    pub fn line(len: f64) -> Result<Self> {
        Self::new(0.0, len)
    }

    /// Arc of the given radius and signed turning angle.
    pub fn arc(radius: f64, turn: f64) -> Result<Self> {
        if !(radius > 0.0) {
            return Err(GeomError::Parameter(format!("arc radius must be positive, got {radius}")));
        }
        Self::new(turn.signum() / radius, turn.abs() * radius)
    }

    pub fn turning(&self) -> f64 {
        self.kappa * self.len
    }

    pub fn is_line(&self) -> bool {
        self.kappa == 0.0
    }

    pub(crate) fn check(&self, index: Option<usize>) -> Result<()> {
        if !(self.kappa.is_finite() && self.len.is_finite()) {
            return Err(GeomError::validation("finite segment", index, "non-finite kappa or len"));
        }
        if self.len <= 0.0 {
            return Err(GeomError::validation(
                "positive length",
                index,
                format!("len = {}", self.len),
            ));
        }
        if self.turning().abs() >= TAU {
            return Err(GeomError::validation(
                "no full wrap",
                index,
                format!("|kappa|·len = {} ≥ 2π", self.turning().abs()),
            ));
        }
        Ok(())
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            kappa: self.kappa / factor,
            len: self.len * factor,
        }
    }
}

/// sin(x)/x, stable near zero.
pub(crate) fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sin() / x
    }
}

/// Point and heading after moving arclength `s` along a piece of curvature `kappa`.
/// Uses the chord form so that nearly straight arcs stay accurate.
pub fn advance(p: Point2, heading: f64, kappa: f64, s: f64) -> (Point2, f64) {
    let half = 0.5 * kappa * s;
    let chord = s * sinc(half);
    (p + Point2::from_angle(heading + half) * chord, heading + kappa * s)
}
