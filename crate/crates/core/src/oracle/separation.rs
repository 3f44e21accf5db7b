//! Witness that no separating equilibrium exists.
//!
//! In a separating profile the low type posts `v_B` and earns `v_B`. If it
//! posts the high type's price instead, consumers believe the quality is good
//! and all of them buy. It then earns the full price, which beats `v_B` for
//! every price above `v_B`.

use serde::Serialize;

use crate::model::ModelParams;
use crate::oracle::cells::buys;
use crate::oracle::grid::GridSpec;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Witness {
    pub p_g: f64,
    pub mimicry_payoff: f64,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeparationReport {
    #[serde(rename = "v_B")]
    pub v_b: f64,
    pub prices_checked: usize,
    pub min_mimicry_payoff: f64,
    pub min_at: f64,
    /// True when every checked price gives the low type more than `v_B`.
    pub holds: bool,
    /// One entry per injected candidate price above `v_B`.
    pub witnesses: Vec<Witness>,
}

/// Low-type payoff from posting `price` when consumers hold belief `mu` in
/// good quality regardless of their signal.
fn mimicry_payoff(params: &ModelParams, price: f64, mu: f64) -> f64 {
    let wtp = mu * params.v_g() + (1.0 - mu) * params.v_b();
    // With a common belief every type and signal behaves alike; the whole
    // unit mass buys when the reservation value covers the price.
    if buys(wtp, price) {
        price
    } else {
        0.0
    }
}

pub fn check_no_separation(params: &ModelParams) -> SeparationReport {
    check_no_separation_on(params, &GridSpec::for_params(params))
}

pub fn check_no_separation_on(params: &ModelParams, grid: &GridSpec) -> SeparationReport {
    let v_b = params.v_b();
    let mut checked = 0;
    let mut min_payoff = f64::INFINITY;
    let mut min_at = f64::NAN;
    let mut holds = true;
    for p in grid.prices().into_iter().filter(|&p| p > v_b) {
        let payoff = mimicry_payoff(params, p, 1.0);
        checked += 1;
        if payoff < min_payoff {
            min_payoff = payoff;
            min_at = p;
        }
        holds &= payoff > v_b;
    }
    let mut witnesses: Vec<Witness> = grid
        .injected
        .iter()
        .copied()
        .filter(|&p| p > v_b)
        .map(|p| {
            let payoff = mimicry_payoff(params, p, 1.0);
            Witness {
                p_g: p,
                mimicry_payoff: payoff,
                margin: payoff - v_b,
            }
        })
        .collect();
    witnesses.sort_by(|a, b| a.p_g.total_cmp(&b.p_g));
    witnesses.dedup_by(|a, b| a.p_g == b.p_g);
    SeparationReport {
        v_b,
        prices_checked: checked,
        min_mimicry_payoff: min_payoff,
        min_at,
        holds,
        witnesses,
    }
}
