use std::f64::consts::PI;

use serde::Serialize;

use crate::kernel::ClosedArcSpline;
use crate::moons::{two_unit_disks_fit, FitWitness};

/// Re-measurement of a curve against the two-disk question at tightened
/// tolerances.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Audit {
    pub tol_geom: f64,
    pub grid_h: f64,
    pub length: f64,
    pub max_abs_kappa: f64,
    pub diameter: f64,
    pub simple: bool,
    pub feasible_diameter: f64,
    pub two_disk_witness: Option<FitWitness>,
    /// Length at least 4π, |kappa| ≤ 1, simple.
    pub hypothesis_met: bool,
    pub diameter_below_4: bool,
    pub no_two_disk_fit: bool,
    pub counterexample: bool,
    pub verdict: String,
}

/// Audits a curve at a tenth of `tol_geom` and a quarter of `grid_h`.
pub fn counterexample_audit(curve: &ClosedArcSpline) -> Audit {
    let base = *curve.tol();
    let tol = base.with_tol_geom(base.tol_geom / 10.0).with_grid_h(base.grid_h / 4.0);
    let curve = curve.clone().with_tol(tol);
    let report = curve.report();
    let fit = two_unit_disks_fit(&curve);
    let t = tol.tol_geom;
    let length_ok = report.length >= 4.0 * PI - t;
    let kappa_ok = report.max_abs_kappa <= 1.0 + t;
    let hypothesis_met = length_ok && kappa_ok && report.simple;
    let diameter_below_4 = report.diameter < 4.0 - t;
    let no_two_disk_fit = fit.witness.is_none();
    let counterexample = hypothesis_met && (diameter_below_4 || no_two_disk_fit);
    let verdict = if counterexample {
        "counterexample candidate".to_string()
    } else if !report.simple {
        "hypothesis not met: curve is not simple".to_string()
    } else if !kappa_ok {
        "hypothesis not met: |kappa| exceeds 1".to_string()
    } else if !length_ok {
        "hypothesis not met: length below 4π".to_string()
    } else {
        "not a counterexample".to_string()
    };
    Audit {
        tol_geom: tol.tol_geom,
        grid_h: tol.grid_h,
        length: report.length,
        max_abs_kappa: report.max_abs_kappa,
        diameter: report.diameter,
        simple: report.simple,
        feasible_diameter: fit.feasible_diameter,
        two_disk_witness: fit.witness,
        hypothesis_met,
        diameter_below_4,
        no_two_disk_fit,
        counterexample,
        verdict,
    }
}
