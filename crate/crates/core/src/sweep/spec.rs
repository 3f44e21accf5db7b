use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::ModelParams;

/// One coordinate of a sweep: a fixed value or an evenly spaced range.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Axis {
    Fixed(f64),
    Range { min: f64, max: f64, steps: usize },
}

impl Axis {
    pub fn range(min: f64, max: f64, steps: usize) -> Self {
        Axis::Range { min, max, steps }
    }

    pub fn is_swept(&self) -> bool {
        matches!(self, Axis::Range { .. })
    }

    fn validate(&self, name: &str) -> Result<()> {
        match *self {
            Axis::Fixed(x) if x.is_finite() => Ok(()),
            Axis::Fixed(x) => Err(Error::InvalidSpec(format!("{name} = {x} is not finite"))),
            Axis::Range { min, max, steps } => {
                if steps < 2 {
                    return Err(Error::InvalidSpec(format!(
                        "{name}: a swept axis needs at least 2 steps"
                    )));
                }
                if !(min.is_finite() && max.is_finite() && min <= max) {
                    return Err(Error::InvalidSpec(format!("{name}: need min <= max (got {min}:{max})")));
                }
                Ok(())
            }
        }
    }

    /// Axis values; the last one equals `max` exactly.
    pub fn values(&self) -> Vec<f64> {
        match *self {
            Axis::Fixed(x) => vec![x],
            Axis::Range { min, max, steps } => (0..steps)
                .map(|i| {
                    if i + 1 == steps {
                        max
                    } else {
                        min + (max - min) * i as f64 / (steps - 1) as f64
                    }
                })
                .collect(),
        }
    }
}

impl FromStr for Axis {
    type Err = Error;

    /// `0.3` or `min:max:steps`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSpec(format!("cannot parse axis `{s}`; expected VALUE or MIN:MAX:STEPS"));
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [x] => x.trim().parse().map(Axis::Fixed).map_err(|_| bad()),
            [a, b, n] => Ok(Axis::Range {
                min: a.trim().parse().map_err(|_| bad())?,
                max: b.trim().parse().map_err(|_| bad())?,
                steps: n.trim().parse().map_err(|_| bad())?,
            }),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Fixed(x) => write!(f, "{x}"),
            Axis::Range { min, max, steps } => write!(f, "{min}:{max}:{steps}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Solve,
    Sweep,
    Regions,
    Compare,
    Thresholds,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::InvalidSpec(format!(
                "unknown format `{s}`; expected csv or json"
            ))),
        }
    }
}

/// A reproducible run: axes, output format and mode. Every field has a
/// default so a spec file only needs the values it changes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepSpec {
    pub h: Axis,
    pub lambda: Axis,
    pub gamma: Axis,
    pub mu0: Axis,
    #[serde(rename = "v_B")]
    pub v_b: Axis,
    pub mode: Mode,
    #[serde(alias = "output")]
    pub format: Format,
    /// Output file; standard output when absent.
    pub out: Option<PathBuf>,
    pub seed: u64,
    /// Monte-Carlo draws per point in `verify` mode.
    pub draws: u64,
    /// Price-grid size of the grid oracle in `verify` mode.
    pub grid_points: usize,
}

impl Default for SweepSpec {
    fn default() -> Self {
        SweepSpec {
            h: Axis::Fixed(0.75),
            lambda: Axis::Fixed(0.0),
            gamma: Axis::Fixed(0.5),
            mu0: Axis::Fixed(0.5),
            v_b: Axis::Fixed(0.1),
            mode: Mode::Solve,
            format: Format::Csv,
            out: None,
            seed: 0,
            draws: 100_000,
            grid_points: crate::oracle::DEFAULT_GRID_POINTS,
        }
    }
}

/// Coordinates of one grid point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Point {
    pub h: f64,
    pub lambda: f64,
    pub gamma: f64,
    pub mu0: f64,
    #[serde(rename = "v_B")]
    pub v_b: f64,
}

impl Point {
    pub fn params(&self) -> Result<ModelParams> {
        ModelParams::new(self.h, self.lambda, self.v_b)?
            .with_gamma(self.gamma)?
            .with_mu0(self.mu0)
    }
}

impl SweepSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))
    }

    pub fn axes(&self) -> [(&'static str, &Axis); 5] {
        [
            ("h", &self.h),
            ("lambda", &self.lambda),
            ("gamma", &self.gamma),
            ("mu0", &self.mu0),
            ("v_B", &self.v_b),
        ]
    }

    pub fn is_single_point(&self) -> bool {
        self.axes().iter().all(|(_, a)| !a.is_swept())
    }

    /// Checks axis shapes and that every grid point is a valid parameter set.
    pub fn validate(&self) -> Result<()> {
        for (name, axis) in self.axes() {
            axis.validate(name)?;
        }
        for lo_hi in [false, true] {
            let pick = |a: &Axis| {
                let v = a.values();
                if lo_hi {
                    v[v.len() - 1]
                } else {
                    v[0]
                }
            };
            let corner = Point {
                h: pick(&self.h),
                lambda: pick(&self.lambda),
                gamma: pick(&self.gamma),
                mu0: pick(&self.mu0),
                v_b: pick(&self.v_b),
            };
            corner.params().map_err(|e| Error::InvalidSpec(e.to_string()))?;
        }
        Ok(())
    }

    /// Grid points in row order: `h` varies fastest, then `lambda`, `gamma`,
    /// `mu0` and `v_B`.
    pub fn points(&self) -> Vec<Point> {
        let mut out = Vec::new();
        for &v_b in &self.v_b.values() {
            for &mu0 in &self.mu0.values() {
                for &gamma in &self.gamma.values() {
                    for &lambda in &self.lambda.values() {
                        for &h in &self.h.values() {
                            out.push(Point {
                                h,
                                lambda,
                                gamma,
                                mu0,
                                v_b,
                            });
                        }
                    }
                }
            }
        }
        out
    }
}
