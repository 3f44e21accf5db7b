//! Naive market with a general share `gamma` of high-precision signals.
//!
//! With `v_B = 0` only two prices matter: `1 − w̄`, which every naive
//! consumer pays, and `w̄`, which only those with a good signal pay. The high
//! type compares `1 − w̄` with `w̄²`, so the switch happens where `w̄` reaches
//! the golden-ratio conjugate.

use serde::Serialize;

use crate::demand::market_schedule;
use crate::equilibrium::pooling::{pool, profit};
use crate::equilibrium::thresholds::H_BRACKET;
use crate::equilibrium::EquilibriumOutcome;
use crate::error::{Error, Result};
use crate::model::{ModelParams, Quality};
use crate::oracle::{find_threshold, DEFAULT_TOL};

fn require(params: &ModelParams) -> Result<()> {
    if params.lambda() != 0.0 || params.v_b() != 0.0 || params.mu0() != 0.5 {
        return Err(Error::UnsupportedVariant(format!(
            "solve_gamma needs lambda = 0, v_B = 0 and mu0 = 0.5 (got lambda = {}, v_B = {}, mu0 = {})",
            params.lambda(),
            params.v_b(),
            params.mu0()
        )));
    }
    Ok(())
}

pub fn solve_gamma(params: &ModelParams) -> Result<EquilibriumOutcome> {
    require(params)?;
    Ok(pool(&market_schedule(params)))
}

/// High-quality profit at the full-coverage price minus the profit at the
/// good-signal price.
fn coverage_gap(h: f64, gamma: f64) -> f64 {
    let p = ModelParams::new(h, 0.0, 0.0)
        .and_then(|p| p.with_gamma(gamma))
        .expect("gamma search stays in the parameter domain");
    let s = market_schedule(&p);
    profit(&s, s.level(2).wtp, Quality::Good) - profit(&s, s.level(4).wtp, Quality::Good)
}

/// `γ̂(h)`: the high type moves from full coverage to the good-signal price
/// as `gamma` crosses it. `None` when one price wins for every `gamma`.
pub fn gamma_hat(h: f64) -> Result<Option<f64>> {
    ModelParams::new(h, 0.0, 0.0)?;
    // At gamma = 0 every signal is uninformative and the gap is exactly zero.
    let lo = 1e-9;
    let hi = 1.0 - f64::EPSILON;
    Ok(find_threshold(|g| coverage_gap(h, g), (lo, hi), DEFAULT_TOL)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GammaThresholds {
    /// Below it full coverage is optimal for every `gamma`.
    pub h_underline: f64,
    /// Above it the good-signal price is optimal at `gamma = 0.5`, and for
    /// every `gamma` above one half.
    pub h_overline: f64,
}

/// Both precision thresholds, found by bisection.
///
/// `h̲` is the limit `gamma → 1`, where `w̄ = h`; the gap is then written
/// directly in `h` because `gamma = 1` itself is outside the domain.
pub fn gamma_thresholds() -> Result<GammaThresholds> {
    let h_underline =
        find_threshold(|h| (1.0 - h) - h * h, H_BRACKET, DEFAULT_TOL)?.expect("gap changes sign on [0.5, 1]");
    let h_overline =
        find_threshold(|h| coverage_gap(h, 0.5), H_BRACKET, DEFAULT_TOL)?.expect("gap changes sign on [0.5, 1]");
    Ok(GammaThresholds {
        h_underline,
        h_overline,
    })
}
