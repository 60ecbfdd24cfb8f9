use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monotone smoothness bound `y(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SmoothnessThreshold {
    /// `y(n) = y0`.
    Constant { y0: f64 },
    /// `y(n) = c * ln n`.
    LogScaled { c: f64 },
    /// `y(n) = n^epsilon`.
    Power { epsilon: f64 },
}

impl SmoothnessThreshold {
    pub fn constant(y0: f64) -> Result<Self> {
        check_param("y0", y0)?;
        Ok(SmoothnessThreshold::Constant { y0 })
    }

    pub fn log_scaled(c: f64) -> Result<Self> {
        check_param("c", c)?;
        Ok(SmoothnessThreshold::LogScaled { c })
    }

    pub fn power(epsilon: f64) -> Result<Self> {
        check_param("epsilon", epsilon)?;
        Ok(SmoothnessThreshold::Power { epsilon })
    }

    /// Re-checks the parameter of a value that came from deserialization.
    pub fn validate(&self) -> Result<()> {
        match *self {
            SmoothnessThreshold::Constant { y0 } => check_param("y0", y0),
            SmoothnessThreshold::LogScaled { c } => check_param("c", c),
            SmoothnessThreshold::Power { epsilon } => check_param("epsilon", epsilon),
        }
    }

    pub fn eval(&self, n: u64) -> f64 {
        let x = n as f64;
        match *self {
            SmoothnessThreshold::Constant { y0 } => y0,
            SmoothnessThreshold::LogScaled { c } => c * x.ln(),
            SmoothnessThreshold::Power { epsilon } => x.powf(epsilon),
        }
    }

    /// The constant threshold `y(N)`, used when a whole window `[n0, N]` is
    /// tested against the single cutoff taken at its right end.
    pub fn fixed_at(&self, n: u64) -> SmoothnessThreshold {
        SmoothnessThreshold::Constant { y0: self.eval(n) }
    }
}

fn check_param(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::argument(format!("threshold parameter {name} must be a positive real, got {v}")))
    }
}

impl fmt::Display for SmoothnessThreshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SmoothnessThreshold::Constant { y0 } => write!(f, "constant:{y0}"),
            SmoothnessThreshold::LogScaled { c } => write!(f, "log:{c}"),
            SmoothnessThreshold::Power { epsilon } => write!(f, "power:{epsilon}"),
        }
    }
}

/// Parses `constant:Y`, `log:C`, `power:EPS`, or a bare number as a constant.
impl FromStr for SmoothnessThreshold {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, value) = match s.split_once(':') {
            Some((k, v)) => (k.trim(), v.trim()),
            None => ("constant", s.trim()),
        };
        let v: f64 = value.parse().map_err(|_| Error::argument(format!("bad threshold value {value:?}")))?;
        match kind {
            "constant" | "const" => Self::constant(v),
            "log" | "log_scaled" => Self::log_scaled(v),
            "power" | "pow" => Self::power(v),
            other => Err(Error::argument(format!("unknown threshold kind {other:?}"))),
        }
    }
}
