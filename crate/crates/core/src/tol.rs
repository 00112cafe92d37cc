use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};

/// Numerical slack used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceConfig {
    /// Closure slack for position and heading.
    pub tol_close: f64,
    /// Distance comparisons.
    pub tol_geom: f64,
    /// Stop width of the incircle radius bisection.
    pub tol_radius: f64,
    /// Span length at which the supporting-point bisection gives up.
    pub eps_arc: f64,
    /// Grid step of the erosion oracle.
    pub grid_h: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            tol_close: 1e-9,
            tol_geom: 1e-9,
            tol_radius: 1e-9,
            eps_arc: 1e-6,
            grid_h: 0.01,
        }
    }
}

impl ToleranceConfig {
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("tol_close", self.tol_close),
            ("tol_geom", self.tol_geom),
            ("tol_radius", self.tol_radius),
            ("eps_arc", self.eps_arc),
            ("grid_h", self.grid_h),
        ];
        for (name, v) in fields {
            if !(v.is_finite() && v > 0.0) {
                return Err(GeomError::Parameter(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(())
    }

    pub fn with_tol_geom(mut self, tol_geom: f64) -> Self {
        self.tol_geom = tol_geom;
        self
    }

    pub fn with_grid_h(mut self, grid_h: f64) -> Self {
        self.grid_h = grid_h;
        self
    }

    /// Slack used when harvesting contacts of a bisected incircle: the radius
    /// is only known to `tol_radius`, and feasibility was tested at `tol_geom`.
    pub fn contact_slack(&self) -> f64 {
        2.0 * (self.tol_geom + self.tol_radius)
    }
}
