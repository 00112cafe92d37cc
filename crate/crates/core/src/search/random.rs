use std::f64::consts::TAU;

use rand::Rng;

use super::repair::{close_by_scales, MIN_RADIUS};
use crate::error::{GeomError, Result};
use crate::kernel::{ArcPath, ClosedArcSpline, Point2, Segment};
use crate::tol::ToleranceConfig;

/// Shape of the random arc-spline distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sampler {
    /// Radii are drawn uniformly from this range; the lower end must be at
    /// least one to keep |kappa| ≤ 1.
    pub radius_range: (f64, f64),
    /// Allow segments that turn clockwise.
    pub allow_concave: bool,
    /// Draws per call before giving up.
    pub retries: usize,
}

impl Default for Sampler {
    fn default() -> Self {
        Self {
            radius_range: (1.0, 4.0),
            allow_concave: true,
            retries: 500,
        }
    }
}

impl Sampler {
    /// Only unit-radius counterclockwise arcs.
    pub fn unit_convex() -> Self {
        Self {
            radius_range: (1.0, 1.0),
            allow_concave: false,
            ..Self::default()
        }
    }

    /// A simple closed curve of `n` arcs with |kappa| ≤ 1.
    ///
    /// Turning angles are drawn and normalized to sum to 2π, radii are drawn
    /// from `radius_range`, and the loop is closed exactly by correcting the
    /// radii. Draws that cannot be closed or are not simple are rejected.
    pub fn sample<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Result<ClosedArcSpline> {
        if n < 3 {
            return Err(GeomError::Parameter(format!("need at least 3 segments, got {n}")));
        }
        let (rlo, rhi) = self.radius_range;
        if !(rlo >= MIN_RADIUS && rhi >= rlo && rhi.is_finite()) {
            return Err(GeomError::Parameter(format!("bad radius range ({rlo}, {rhi})")));
        }
        let lo = if self.allow_concave { -0.6 } else { 0.1 };
        for _ in 0..self.retries {
            let raw: Vec<f64> = (0..n)
                .map(|_| {
                    let a: f64 = rng.gen_range(lo..1.0);
                    if a.abs() < 0.05 {
                        0.05f64.copysign(a)
                    } else {
                        a
                    }
                })
                .collect();
            let radii: Vec<f64> = (0..n)
                .map(|_| if rhi > rlo { rng.gen_range(rlo..rhi) } else { rlo })
                .collect();
            let heading = rng.gen_range(0.0..TAU);
            let sum: f64 = raw.iter().sum();
            if sum < 0.5 {
                continue;
            }
            let turns: Vec<f64> = raw.iter().map(|a| a * TAU / sum).collect();
            if turns.iter().any(|t| t.abs() >= TAU - 0.1) {
                continue;
            }
            let lower = vec![rlo; n];
            let Some(x) = close_by_scales(heading, &turns, &radii, &lower) else {
                continue;
            };
            let Ok(segs) = turns
                .iter()
                .zip(&x)
                .map(|(&t, &r)| Segment::arc(r, t))
                .collect::<Result<Vec<_>>>()
            else {
                continue;
            };
            let Ok(path) = ArcPath::new(Point2::ORIGIN, heading, segs) else {
                continue;
            };
            if let Ok(curve) = ClosedArcSpline::from_path(path, ToleranceConfig::default()) {
                return Ok(curve);
            }
        }
        Err(GeomError::Construction(format!(
            "no valid curve with {n} segments after {} draws",
            self.retries
        )))
    }
}

/// A simple closed curve of `n` arcs with |kappa| ≤ 1, drawn with the
/// default [`Sampler`].
pub fn random_valid_curve<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<ClosedArcSpline> {
    Sampler::default().sample(n, rng)
}
