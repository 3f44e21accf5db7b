//! Pure-strategy pooling equilibria.
//!
//! Both types post the price that maximizes the high-quality profit, since
//! consumers learn nothing from a common price and the high type has the
//! most to lose. The low type could instead reveal itself and sell to every
//! consumer at `v_B`. Any other deviation is one that only the low type could
//! find attractive, so consumers who see it conclude the quality is bad and
//! the best it can earn is again `v_B`. Pooling therefore survives exactly
//! when the low type earns at least `v_B` at the common price.

use serde::Serialize;

use crate::demand::{market_schedule, WtpSchedule};
use crate::equilibrium::EquilibriumOutcome;
use crate::error::Result;
use crate::model::{ModelParams, Quality};

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Candidate {
    pub price: f64,
    pub level: Option<u8>,
}

/// Candidate prices in ascending order. Equal prices keep the lower WTP level
/// first and `v_B` last, so a tie reports the WTP level.
pub(crate) fn candidates(schedule: &WtpSchedule) -> Vec<Candidate> {
    let mut c: Vec<Candidate> = schedule
        .levels()
        .iter()
        .map(|l| Candidate {
            price: l.wtp,
            level: Some(l.label.level()),
        })
        .collect();
    c.push(Candidate {
        price: schedule.v_b(),
        level: None,
    });
    c.sort_by(|a, b| a.price.total_cmp(&b.price));
    c
}

pub(crate) fn profit(schedule: &WtpSchedule, price: f64, quality: Quality) -> f64 {
    price * schedule.demand_at(price, quality)
}

/// High-quality optimum over the candidates; exact ties go to the lower price.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PoolingCandidate {
    pub price: f64,
    pub level: Option<u8>,
    #[serde(rename = "profit_G")]
    pub profit_g: f64,
    #[serde(rename = "profit_B")]
    pub profit_b: f64,
}

pub(crate) fn best_candidate(schedule: &WtpSchedule) -> PoolingCandidate {
    let mut best: Option<(Candidate, f64)> = None;
    for c in candidates(schedule) {
        let pi = profit(schedule, c.price, Quality::Good);
        if best.is_none_or(|(_, b)| pi > b) {
            best = Some((c, pi));
        }
    }
    let (c, profit_g) = best.expect("candidate set is never empty");
    PoolingCandidate {
        price: c.price,
        level: c.level,
        profit_g,
        profit_b: profit(schedule, c.price, Quality::Bad),
    }
}

pub(crate) fn pool(schedule: &WtpSchedule) -> EquilibriumOutcome {
    let c = best_candidate(schedule);
    let v_b = schedule.v_b();
    if c.profit_b >= v_b {
        EquilibriumOutcome::pooling(c.price, c.level, c.profit_g, c.profit_b)
    } else {
        EquilibriumOutcome::none(format!(
            "low-quality firm earns {} at the pooling price {} and gains by revealing itself at v_B = {}",
            c.profit_b, c.price, v_b
        ))
    }
}

/// Profit-maximizing common price, ignoring whether the low type deviates.
pub fn pooling_candidate(params: &ModelParams) -> Result<PoolingCandidate> {
    params.require_base("pooling_candidate")?;
    Ok(best_candidate(&market_schedule(params)))
}

/// Pooling equilibrium of the base model, or `kind = none` when the low type
/// prefers to reveal itself.
pub fn solve_pooling(params: &ModelParams) -> Result<EquilibriumOutcome> {
    params.require_base("solve_pooling")?;
    Ok(pool(&market_schedule(params)))
}
