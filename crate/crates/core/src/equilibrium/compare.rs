//! Naive versus sophisticated market at the same `(h, v_B)`.

use serde::Serialize;

use crate::equilibrium::{solve, EquilibriumOutcome};
use crate::error::{Error, Result};
use crate::model::ModelParams;

/// Profits closer than this are reported as a tie.
pub const PREFERENCE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Preference {
    Naive,
    Sophisticated,
    Indifferent,
}

impl Preference {
    fn from_gap(gap: f64) -> Self {
        if gap > PREFERENCE_TOL {
            Preference::Naive
        } else if gap < -PREFERENCE_TOL {
            Preference::Sophisticated
        } else {
            Preference::Indifferent
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Preference::Naive => "naive",
            Preference::Sophisticated => "sophisticated",
            Preference::Indifferent => "indifferent",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MarketComparison {
    pub h: f64,
    #[serde(rename = "v_B")]
    pub v_b: f64,
    pub naive: EquilibriumOutcome,
    pub sophisticated: EquilibriumOutcome,
    /// `None` when either market has no equilibrium.
    #[serde(rename = "preferred_by_G")]
    pub preferred_by_g: Option<Preference>,
    #[serde(rename = "preferred_by_B")]
    pub preferred_by_b: Option<Preference>,
    /// Naive-market profit minus sophisticated-market profit.
    #[serde(rename = "gap_G")]
    pub gap_g: Option<f64>,
    #[serde(rename = "gap_B")]
    pub gap_b: Option<f64>,
}

pub fn compare_markets(naive: &ModelParams, sophisticated: &ModelParams) -> Result<MarketComparison> {
    if naive.h() != sophisticated.h() || naive.v_b() != sophisticated.v_b() {
        return Err(Error::UnsupportedVariant(format!(
            "markets must share h and v_B (got h = {} / {}, v_B = {} / {})",
            naive.h(),
            sophisticated.h(),
            naive.v_b(),
            sophisticated.v_b()
        )));
    }
    if naive.lambda() != 0.0 || sophisticated.lambda() != 1.0 {
        return Err(Error::UnsupportedVariant(format!(
            "comparison needs lambda = 0 and lambda = 1 (got {} and {})",
            naive.lambda(),
            sophisticated.lambda()
        )));
    }
    let n = solve(naive)?;
    let s = solve(sophisticated)?;
    let gap = |a: Option<f64>, b: Option<f64>| a.zip(b).map(|(a, b)| a - b);
    let gap_g = gap(n.profit_g, s.profit_g);
    let gap_b = gap(n.profit_b, s.profit_b);
    Ok(MarketComparison {
        h: naive.h(),
        v_b: naive.v_b(),
        naive: n,
        sophisticated: s,
        preferred_by_g: gap_g.map(Preference::from_gap),
        preferred_by_b: gap_b.map(Preference::from_gap),
        gap_g,
        gap_b,
    })
}

/// Both markets at `(h, v_B)`.
pub fn compare_at(h: f64, v_b: f64) -> Result<MarketComparison> {
    compare_markets(&ModelParams::new(h, 0.0, v_b)?, &ModelParams::new(h, 1.0, v_b)?)
}
