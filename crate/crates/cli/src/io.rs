use std::fs;
use std::io::Read;
use std::path::Path;

use puddle::{ClosedArcSpline, CurveJson, GeomError, ToleranceConfig};
use serde::Serialize;

pub const OK: u8 = 0;
pub const USER: u8 = 2;
pub const ALERT: u8 = 3;
pub const NUMERICAL: u8 = 4;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn user(message: impl Into<String>) -> Self {
        Self {
            code: USER,
            message: message.into(),
        }
    }
}

impl From<GeomError> for Failure {
    fn from(e: GeomError) -> Self {
        let code = match e {
            GeomError::CounterexampleAlert(_) => ALERT,
            GeomError::NumericalFailure { .. } | GeomError::Unbounded { .. } => NUMERICAL,
            _ => USER,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

pub type CmdResult = Result<u8, Failure>;

/// Default tolerances, with `tol_geom` taken from `PUDDLE_TOL` when set.
pub fn tolerance() -> Result<ToleranceConfig, Failure> {
    let tol = ToleranceConfig::default();
    match std::env::var("PUDDLE_TOL") {
        Ok(v) => {
            let g: f64 = v
                .trim()
                .parse()
                .map_err(|_| Failure::user(format!("PUDDLE_TOL must be a number, got {v:?}")))?;
            let tol = tol.with_tol_geom(g);
            tol.validate()?;
            Ok(tol)
        }
        Err(_) => Ok(tol),
    }
}

pub fn read_text(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::user(format!("reading standard input: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::user(format!("reading {}: {e}", path.display())))
}

pub fn parse<T: serde::de::DeserializeOwned>(path: &Path, what: &str) -> Result<T, Failure> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| Failure::user(format!("malformed {what} JSON in {}: {e}", path.display())))
}

pub fn read_curve_json(path: &Path) -> Result<CurveJson, Failure> {
    parse(path, "curve")
}

pub fn read_curve(path: &Path, tol: ToleranceConfig) -> Result<ClosedArcSpline, Failure> {
    Ok(ClosedArcSpline::from_json(&read_curve_json(path)?, tol)?)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable value")
}

pub fn emit<T: Serialize>(value: &T) {
    println!("{}", to_json(value));
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::user(format!("writing {}: {e}", path.display())))
}
