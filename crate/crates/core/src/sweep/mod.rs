//! Parameter sweeps and their tabular output.
//!
//! A [`SweepSpec`] names a value or a range for each of the five parameters
//! and a mode. [`run`] evaluates every grid point (in parallel, rows kept in
//! grid order) and returns a [`Table`] ready for CSV or JSON output.

pub mod format;
mod spec;
mod verify;

pub use format::{format_float, Table, Value, SIG_DIGITS};
pub use spec::{Axis, Format, Mode, Point, SweepSpec};
pub use verify::{verify_point, VerifyRow};

use rayon::prelude::*;
use serde::Serialize;

use crate::equilibrium::{
    compare_at, gamma_hat, gamma_thresholds, h_star_prior, mu_underline, prior_price_bounds, solve, thresholds,
    Classification, EquilibriumOutcome, Preference,
};
use crate::error::{Error, Result};
use crate::model::ModelParams;

/// One row of a region map.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegionCell {
    pub h: f64,
    pub lambda: f64,
    pub gamma: f64,
    pub mu0: f64,
    #[serde(rename = "v_B")]
    pub v_b: f64,
    pub classification: Classification,
    pub price: Option<f64>,
    pub alpha: Option<f64>,
    #[serde(rename = "profit_G")]
    pub profit_g: Option<f64>,
    #[serde(rename = "profit_B")]
    pub profit_b: Option<f64>,
}

impl RegionCell {
    fn new(p: Point, o: &EquilibriumOutcome) -> Self {
        RegionCell {
            h: p.h,
            lambda: p.lambda,
            gamma: p.gamma,
            mu0: p.mu0,
            v_b: p.v_b,
            classification: o.classification(),
            price: o.price,
            alpha: o.alpha,
            profit_g: o.profit_g,
            profit_b: o.profit_b,
        }
    }
}

/// Result of [`run`]: the table and, in verify mode, the number of points
/// that failed a check.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub table: Table,
    pub failures: usize,
}

fn par_map<T: Send>(points: &[Point], f: impl Fn(usize, Point) -> Result<T> + Sync) -> Result<Vec<T>> {
    points.par_iter().enumerate().map(|(i, &p)| f(i, p)).collect()
}

fn solve_points(spec: &SweepSpec) -> Result<Vec<(Point, EquilibriumOutcome)>> {
    spec.validate()?;
    par_map(&spec.points(), |_, p| Ok((p, solve(&p.params()?)?)))
}

/// Solves every grid point and labels it.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<RegionCell>> {
    Ok(solve_points(spec)?
        .iter()
        .map(|(p, o)| RegionCell::new(*p, o))
        .collect())
}

const COORDS: [&str; 5] = ["h", "lambda", "gamma", "mu0", "v_B"];

fn columns(extra: &[&'static str]) -> Vec<&'static str> {
    COORDS.iter().chain(extra).copied().collect()
}

fn coords(p: &Point) -> Vec<Value> {
    [p.h, p.lambda, p.gamma, p.mu0, p.v_b].map(Value::Num).to_vec()
}

pub fn regions_table(cells: &[RegionCell]) -> Table {
    let mut t = Table::new(columns(&["classification", "price", "alpha", "profit_G", "profit_B"]));
    for c in cells {
        let mut row = [c.h, c.lambda, c.gamma, c.mu0, c.v_b].map(Value::Num).to_vec();
        row.extend([
            Value::text(c.classification.as_str()),
            Value::opt(c.price),
            Value::opt(c.alpha),
            Value::opt(c.profit_g),
            Value::opt(c.profit_b),
        ]);
        t.push(row);
    }
    t
}

fn outcome_table(solved: &[(Point, EquilibriumOutcome)]) -> Table {
    let mut t = Table::new(columns(&[
        "kind",
        "classification",
        "price",
        "low_price",
        "alpha",
        "profit_G",
        "profit_B",
        "candidate_level",
    ]));
    for (p, o) in solved {
        let mut row = coords(p);
        row.extend([
            Value::text(format!("{:?}", o.kind).to_lowercase()),
            Value::text(o.classification().as_str()),
            Value::opt(o.price),
            Value::opt(o.low_price),
            Value::opt(o.alpha),
            Value::opt(o.profit_g),
            Value::opt(o.profit_b),
            o.candidate_level.map_or(Value::Missing, |l| Value::Int(l.into())),
        ]);
        t.push(row);
    }
    t
}

fn require_base_axes(spec: &SweepSpec, mode: &str) -> Result<()> {
    if spec.lambda.is_swept() || spec.gamma != Axis::Fixed(0.5) || spec.mu0 != Axis::Fixed(0.5) {
        return Err(Error::InvalidSpec(format!(
            "{mode} compares lambda = 0 with lambda = 1 in the base model; sweep only h and v_B"
        )));
    }
    Ok(())
}

struct CurvePoint {
    h: f64,
    v_b: f64,
    g: [Option<f64>; 2],
    b: [Option<f64>; 2],
    pref: [Option<Preference>; 2],
}

fn curve_points(spec: &SweepSpec) -> Result<Vec<CurvePoint>> {
    spec.validate()?;
    require_base_axes(spec, "a market comparison")?;
    par_map(&spec.points(), |_, p| {
        let c = compare_at(p.h, p.v_b)?;
        Ok(CurvePoint {
            h: p.h,
            v_b: p.v_b,
            g: [c.naive.profit_g, c.sophisticated.profit_g],
            b: [c.naive.profit_b, c.sophisticated.profit_b],
            pref: [c.preferred_by_g, c.preferred_by_b],
        })
    })
}

/// Naive-market and sophisticated-market profits of both types along `h`.
/// `lambda` must not be swept; both values are used. `v_B` must be fixed.
pub fn emit_profit_curves(spec: &SweepSpec) -> Result<Table> {
    if spec.v_b.is_swept() {
        return Err(Error::InvalidSpec("profit curves need a fixed v_B".into()));
    }
    let mut t = Table::new(vec![
        "h",
        "profit_G_naive",
        "profit_G_soph",
        "profit_B_naive",
        "profit_B_soph",
    ]);
    for c in curve_points(spec)? {
        t.push(vec![
            Value::Num(c.h),
            Value::opt(c.g[0]),
            Value::opt(c.g[1]),
            Value::opt(c.b[0]),
            Value::opt(c.b[1]),
        ]);
    }
    Ok(t)
}

fn compare_table(spec: &SweepSpec) -> Result<Table> {
    let mut t = Table::new(vec![
        "h",
        "v_B",
        "profit_G_naive",
        "profit_G_soph",
        "profit_B_naive",
        "profit_B_soph",
        "preferred_by_G",
        "preferred_by_B",
    ]);
    for c in curve_points(spec)? {
        let pref = |p: Option<Preference>| p.map_or(Value::Missing, |p| Value::text(p.as_str()));
        t.push(vec![
            Value::Num(c.h),
            Value::Num(c.v_b),
            Value::opt(c.g[0]),
            Value::opt(c.g[1]),
            Value::opt(c.b[0]),
            Value::opt(c.b[1]),
            pref(c.pref[0]),
            pref(c.pref[1]),
        ]);
    }
    Ok(t)
}

fn thresholds_table(spec: &SweepSpec) -> Result<Table> {
    spec.validate()?;
    let ext = gamma_thresholds()?;
    let rows = par_map(&spec.points(), |_, p| {
        let base = ModelParams::new(p.h, p.lambda, p.v_b)?;
        let t = thresholds(&base)?;
        let prior = ModelParams::new(p.h, 0.0, p.v_b)?.with_mu0(p.mu0)?;
        let (price_low, price_high) = prior_price_bounds(&prior);
        let mut row = coords(&p);
        row.extend([
            Value::opt(t.h_star),
            Value::opt(t.h_star_sophisticated),
            Value::opt(t.h_star_naive),
            Value::opt(t.h_hat1),
            Value::opt(t.h_hat2),
            Value::opt(t.h_hat3),
            Value::opt(t.lambda_hat1),
            Value::opt(t.lambda_hat2),
            Value::opt(t.lambda_hat3),
            Value::opt(t.lambda_bar),
            Value::Num(t.v_bar),
            Value::Num(t.v_bar_prime),
            Value::opt(t.h_underline),
            Value::opt(t.h_overline),
            Value::opt(gamma_hat(p.h)?),
            Value::Num(ext.h_underline),
            Value::Num(ext.h_overline),
            Value::Num(price_low),
            Value::Num(price_high),
            Value::opt(h_star_prior(p.mu0, p.v_b)?),
            Value::Num(mu_underline(p.v_b)?),
        ]);
        Ok(row)
    })?;
    let mut t = Table::new(columns(&[
        "h_star",
        "h_star_sophisticated",
        "h_star_naive",
        "h_hat1",
        "h_hat2",
        "h_hat3",
        "lambda_hat1",
        "lambda_hat2",
        "lambda_hat3",
        "lambda_bar",
        "v_bar",
        "v_bar_prime",
        "h_underline",
        "h_overline",
        "gamma_hat",
        "h_underline_gamma",
        "h_overline_gamma",
        "price_low_prior",
        "price_high_prior",
        "h_star_prior",
        "mu_underline",
    ]));
    rows.into_iter().for_each(|r| t.push(r));
    Ok(t)
}

fn verify_table(spec: &SweepSpec) -> Result<Report> {
    spec.validate()?;
    let rows = par_map(&spec.points(), |i, p| verify_point(&p.params()?, spec, i as u64))?;
    let failures = rows.iter().filter(|r| !r.pass).count();
    Ok(Report {
        table: VerifyRow::table(&rows),
        failures,
    })
}

/// Runs `spec` in its mode.
pub fn run(spec: &SweepSpec) -> Result<Report> {
    let table = match spec.mode {
        Mode::Solve => {
            if !spec.is_single_point() {
                return Err(Error::InvalidSpec(
                    "solve takes a single point; use sweep for ranges".into(),
                ));
            }
            outcome_table(&solve_points(spec)?)
        }
        Mode::Sweep => outcome_table(&solve_points(spec)?),
        Mode::Regions => regions_table(&run_sweep(spec)?),
        Mode::Compare => compare_table(spec)?,
        Mode::Thresholds => thresholds_table(spec)?,
        Mode::Verify => return verify_table(spec),
    };
    Ok(Report { table, failures: 0 })
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.table.to_csv_string(),
            Format::Json => self.table.to_json_string(),
        }
    }
}
