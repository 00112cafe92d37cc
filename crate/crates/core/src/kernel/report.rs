use serde::{Deserialize, Serialize};

use super::diameter::diameter;
use super::intersect;
use super::path::{check_closure, ArcPath};
use super::point::Point2;
use crate::tol::ToleranceConfig;

/// Summary of the quantities that enter the curvature and diameter
/// hypotheses. Validation problems are reported as flags.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveReport {
    pub length: f64,
    pub max_abs_kappa: f64,
    pub diameter: f64,
    pub diam_p1: Point2,
    pub diam_p2: Point2,
    pub simple: bool,
    pub turning: f64,
    pub closed: bool,
    /// Name of the first violated validation rule, if any.
    pub violation: Option<String>,
}

pub fn report(path: &ArcPath, tol: &ToleranceConfig) -> CurveReport {
    let d = diameter(path, tol.tol_geom);
    let closure = check_closure(path, tol);
    let closed = closure.is_ok();
    let crossing = if closed {
        intersect::first_crossing(path, tol.tol_geom)
    } else {
        None
    };
    let violation = match (&closure, crossing) {
        (Err(e), _) => Some(e.to_string()),
        (Ok(()), Some((i, j))) => Some(format!("simplicity: segment {i} meets segment {j}")),
        _ => None,
    };
    CurveReport {
        length: path.length(),
        max_abs_kappa: path.max_abs_curvature(),
        diameter: d.value,
        diam_p1: d.p1,
        diam_p2: d.p2,
        simple: closed && crossing.is_none(),
        turning: path.turning(),
        closed,
        violation,
    }
}

/// Simplicity of a closed path. Errors if the path does not close up.
pub fn is_simple(path: &ArcPath, tol: &ToleranceConfig) -> crate::Result<bool> {
    let (gap, dh) = path.closure_gap();
    if gap > tol.tol_close || dh > tol.tol_close {
        return Err(crate::GeomError::validation(
            "closure",
            Some(path.segments().len() - 1),
            format!("path does not close (gap {gap:e}, heading {dh:e})"),
        ));
    }
    Ok(intersect::first_crossing(path, tol.tol_geom).is_none())
}
