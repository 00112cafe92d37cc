use thiserror::Error;

pub type Result<T, E = GeomError> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum GeomError {
    /// A constructor or operation argument is outside its domain.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// A curve failed validation. `invariant` names the violated rule.
    #[error("validation error: {invariant} violated{}: {detail}", segment_suffix(*.segment))]
    Validation {
        invariant: &'static str,
        segment: Option<usize>,
        detail: String,
    },

    #[error("point {x}, {y} lies on the curve")]
    BoundaryPoint { x: f64, y: f64 },

    #[error("incircle radius exceeds the curve's bounding box ({radius})")]
    Unbounded { radius: f64 },

    #[error("invalid span [{t_lo}, {t_hi}]: {detail}")]
    InvalidSpan { t_lo: f64, t_hi: f64, detail: String },

    #[error("numerical failure on span [{t_lo}, {t_hi}]: {detail}")]
    NumericalFailure { t_lo: f64, t_hi: f64, detail: String },

    /// A theorem hypothesis (curvature or diameter) does not hold.
    #[error("hypothesis not met: {hypothesis} ({detail})")]
    Hypothesis {
        hypothesis: &'static str,
        detail: String,
    },

    #[error("construction failed: {0}")]
    Construction(String),

    /// A verified curve appears to violate a proven statement.
    #[error("counterexample alert: {0}")]
    CounterexampleAlert(String),
}

fn segment_suffix(segment: Option<usize>) -> String {
    match segment {
        Some(i) => format!(" at segment {i}"),
        None => String::new(),
    }
}

impl GeomError {
    pub(crate) fn validation(invariant: &'static str, segment: Option<usize>, detail: impl Into<String>) -> Self {
        GeomError::Validation {
            invariant,
            segment,
            detail: detail.into(),
        }
    }
}
