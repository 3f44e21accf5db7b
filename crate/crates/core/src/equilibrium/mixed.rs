//! Partially separating equilibrium of a fully naive market.
//!
//! The high type posts `p̄`. The low type posts `p̄` with probability `alpha`
//! and reveals itself at `v_B` otherwise. Seeing `p̄` raises the prior to
//! `1 / (1 + alpha)`, and `alpha` is pinned down by two requirements: the low
//! type is indifferent, `(3 − 2h)/4 · p̄ = v_B`, and `p̄` is exactly what a
//! naive consumer with a good signal will pay.

use serde::Serialize;

use crate::equilibrium::EquilibriumOutcome;
use crate::error::{Error, Result};
use crate::model::{naive_likelihood, ModelParams, Quality, Valence};

/// Open interval of `v_B` values where the mixed equilibrium exists.
pub fn mixing_band(h: f64) -> (f64, f64) {
    let a = 3.0 - 2.0 * h;
    (a / (7.0 - 2.0 * h), a / 4.0)
}

fn require_naive(params: &ModelParams) -> Result<()> {
    params.require_base("solve_mixed")?;
    if params.lambda() != 0.0 {
        return Err(Error::UnsupportedVariant(format!(
            "mixed strategies are characterized only for lambda = 0 (got {})",
            params.lambda()
        )));
    }
    Ok(())
}

pub fn solve_mixed(params: &ModelParams) -> Result<EquilibriumOutcome> {
    require_naive(params)?;
    let h = params.h();
    let v = params.v_b();
    let (lo, hi) = mixing_band(h);
    if !(v > lo && v < hi) {
        return Ok(EquilibriumOutcome::none(format!(
            "v_B = {v} is outside the mixing band ({lo}, {hi})"
        )));
    }
    let bad_share = (3.0 - 2.0 * h) / 4.0;
    let good_share = (1.0 + 2.0 * h) / 4.0;
    let high = v / bad_share;
    let alpha = 1.0 / v - 1.0 / bad_share;
    Ok(EquilibriumOutcome::mixed(high, v, alpha, good_share * high, v))
}

/// Beliefs and reservation values of naive consumers who see the high price.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MixedBeliefs {
    /// `Pr(G | p̄)` before the private signal.
    pub price_posterior: f64,
    pub good_signal_posterior: f64,
    pub bad_signal_posterior: f64,
    pub good_signal_wtp: f64,
    pub bad_signal_wtp: f64,
}

/// Consistent beliefs at the high price when the low type posts it with
/// probability `alpha`.
pub fn mixed_beliefs(params: &ModelParams, alpha: f64) -> MixedBeliefs {
    let mu0 = params.mu0();
    let prior = mu0 / (mu0 + (1.0 - mu0) * alpha);
    let update = |valence| {
        let g = naive_likelihood(params, valence, Quality::Good);
        let b = naive_likelihood(params, valence, Quality::Bad);
        prior * g / (prior * g + (1.0 - prior) * b)
    };
    let good = update(Valence::Good);
    let bad = update(Valence::Bad);
    MixedBeliefs {
        price_posterior: prior,
        good_signal_posterior: good,
        bad_signal_posterior: bad,
        good_signal_wtp: params.wtp(good),
        bad_signal_wtp: params.wtp(bad),
    }
}

/// `Π_L(p̄) − v_B`. Only consumers with a good signal buy at `p̄`, and they
/// make up a share `(3 − 2h)/4` of the market when the quality is bad.
pub fn indifference_residual(params: &ModelParams, outcome: &EquilibriumOutcome) -> Option<f64> {
    let high = outcome.price?;
    let low = outcome.low_price?;
    let bad_share = 1.0 - naive_likelihood(params, Valence::Good, Quality::Good);
    Some(bad_share * high - low)
}
