//! Equilibrium solvers for the base model and its two extensions.

mod compare;
mod gamma;
mod mixed;
mod outcome;
pub(crate) mod pooling;
mod prior;
pub mod thresholds;

pub use compare::{compare_at, compare_markets, MarketComparison, Preference, PREFERENCE_TOL};
pub use gamma::{gamma_hat, gamma_thresholds, solve_gamma, GammaThresholds};
pub use mixed::{indifference_residual, mixed_beliefs, mixing_band, solve_mixed, MixedBeliefs};
pub use outcome::{Classification, EquilibriumKind, EquilibriumOutcome, Region};
pub use pooling::{pooling_candidate, solve_pooling, PoolingCandidate};
pub use prior::{h_star_prior, mu_underline, prior_price_bounds, prior_thresholds, solve_prior, PriorThresholds};
pub use thresholds::{thresholds, ThresholdSet, V_BAR_PRIME};

use crate::error::{Error, Result};
use crate::model::ModelParams;

/// Picks the solver that applies at `params`.
///
/// A non-default `gamma` goes to [`solve_gamma`] and a non-default prior to
/// [`solve_prior`]. Otherwise the base pooling solver runs, and a naive
/// market without a pooling equilibrium falls back to [`solve_mixed`].
pub fn solve(params: &ModelParams) -> Result<EquilibriumOutcome> {
    match (params.gamma() != 0.5, params.mu0() != 0.5) {
        (true, true) => Err(Error::UnsupportedVariant(
            "gamma and mu0 cannot both differ from 0.5".into(),
        )),
        (true, false) => solve_gamma(params),
        (false, true) => solve_prior(params),
        (false, false) => {
            let pooled = solve_pooling(params)?;
            if pooled.is_none() && params.lambda() == 0.0 {
                let mixed = solve_mixed(params)?;
                if mixed.is_mixed() {
                    return Ok(mixed);
                }
            }
            Ok(pooled)
        }
    }
}
