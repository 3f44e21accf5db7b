//! Naive market with a general prior `mu0`.
//!
//! The candidate prices are the two naive reservation values: `p̲` after a
//! bad signal, which everyone pays, and `p̄` after a good signal, which only
//! consumers with a good signal pay.

use serde::Serialize;

use crate::demand::market_schedule;
use crate::equilibrium::pooling::{pool, profit};
use crate::equilibrium::thresholds::H_BRACKET;
use crate::equilibrium::EquilibriumOutcome;
use crate::error::{Error, Result};
use crate::model::{ModelParams, Quality};
use crate::oracle::{find_threshold, DEFAULT_TOL};

fn require(params: &ModelParams) -> Result<()> {
    if params.lambda() != 0.0 || params.gamma() != 0.5 {
        return Err(Error::UnsupportedVariant(format!(
            "solve_prior needs lambda = 0 and gamma = 0.5 (got lambda = {}, gamma = {})",
            params.lambda(),
            params.gamma()
        )));
    }
    Ok(())
}

/// Pooling equilibrium of a naive market under prior `mu0`; `kind = none`
/// when the low type would rather reveal itself at `v_B`.
pub fn solve_prior(params: &ModelParams) -> Result<EquilibriumOutcome> {
    require(params)?;
    Ok(pool(&market_schedule(params)))
}

/// `(p̲, p̄)` in closed form.
pub fn prior_price_bounds(params: &ModelParams) -> (f64, f64) {
    let (h, m, v) = (params.h(), params.mu0(), params.v_b());
    let lo = 3.0 - 2.0 * h;
    let hi = 1.0 + 2.0 * h;
    let low = (m * lo + (1.0 - m) * hi * v) / (m * lo + (1.0 - m) * hi);
    let high = (m * hi + (1.0 - m) * lo * v) / (m * hi + (1.0 - m) * lo);
    (low, high)
}

fn naive(h: f64, mu0: f64, v_b: f64) -> ModelParams {
    ModelParams::new(h, 0.0, v_b)
        .and_then(|p| p.with_mu0(mu0))
        .expect("prior search stays in the parameter domain")
}

/// `h*(mu0)`: where `p̲ = (1 + 2h)/4 · p̄`. `None` when full coverage stays
/// optimal up to `h = 1`.
pub fn h_star_prior(mu0: f64, v_b: f64) -> Result<Option<f64>> {
    ModelParams::new(0.5, 0.0, v_b)?.with_mu0(mu0)?;
    let f = |h: f64| {
        let s = market_schedule(&naive(h, mu0, v_b));
        profit(&s, s.level(2).wtp, Quality::Good) - profit(&s, s.level(4).wtp, Quality::Good)
    };
    Ok(find_threshold(f, H_BRACKET, DEFAULT_TOL)?)
}

/// Slope in `h` of the low type's profit at `p̄`, `(3 − 2h)/4 · p̄(h)`.
fn low_profit_slope(h: f64, m: f64, v: f64) -> f64 {
    let n = m * (1.0 + 2.0 * h) + (1.0 - m) * (3.0 - 2.0 * h) * v;
    let d = m * (1.0 + 2.0 * h) + (1.0 - m) * (3.0 - 2.0 * h);
    let dn = 2.0 * m - 2.0 * (1.0 - m) * v;
    let dd = 2.0 * m - 2.0 * (1.0 - m);
    -n / (2.0 * d) + (3.0 - 2.0 * h) / 4.0 * (dn * d - n * dd) / (d * d)
}

const SLOPE_POINTS: usize = 256;

/// Whether the low type's profit at `p̄` falls in `h` on all of `(h*(mu0), 1)`.
/// Holds vacuously when `p̄` is never optimal.
fn low_profit_falls(mu0: f64, v_b: f64) -> Result<bool> {
    let Some(hs) = h_star_prior(mu0, v_b)? else {
        return Ok(true);
    };
    Ok((1..=SLOPE_POINTS).all(|i| {
        let h = hs + (1.0 - hs) * i as f64 / SLOPE_POINTS as f64;
        low_profit_slope(h, mu0, v_b) < 0.0
    }))
}

const PRIOR_SCAN_STEP: f64 = 1e-3;

/// `μ̲`: the smallest prior such that, for every prior between it and 0.5,
/// the low type's profit at `p̄` falls with precision.
///
/// Priors are scanned downward from 0.5 in steps of 0.001. The first failure
/// is then refined by bisection on the pass/fail boundary.
pub fn mu_underline(v_b: f64) -> Result<f64> {
    ModelParams::new(0.5, 0.0, v_b)?;
    let steps = (0.5 / PRIOR_SCAN_STEP).round() as usize;
    let mut pass = 0.5;
    for i in 1..=steps {
        let m = 0.5 - i as f64 * PRIOR_SCAN_STEP;
        if !low_profit_falls(m, v_b)? {
            let mut fail = m;
            while pass - fail > DEFAULT_TOL {
                let mid = 0.5 * (pass + fail);
                if low_profit_falls(mid, v_b)? {
                    pass = mid;
                } else {
                    fail = mid;
                }
            }
            return Ok(pass);
        }
        pass = m;
    }
    Ok(0.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PriorThresholds {
    pub mu0: f64,
    #[serde(rename = "v_B")]
    pub v_b: f64,
    pub price_low: f64,
    pub price_high: f64,
    pub h_star: Option<f64>,
    pub mu_underline: f64,
}

pub fn prior_thresholds(params: &ModelParams) -> Result<PriorThresholds> {
    require(params)?;
    let (price_low, price_high) = prior_price_bounds(params);
    Ok(PriorThresholds {
        mu0: params.mu0(),
        v_b: params.v_b(),
        price_low,
        price_high,
        h_star: h_star_prior(params.mu0(), params.v_b())?,
        mu_underline: mu_underline(params.v_b())?,
    })
}
