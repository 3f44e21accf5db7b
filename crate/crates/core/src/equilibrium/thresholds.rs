//! Comparative-statics thresholds of the base model.
//!
//! All thresholds are roots of differences between level profits
//! `Π_k = p_k · D_k`, the high-quality profit from pricing exactly at WTP
//! level `k`. Level profits are continuous in `h` and `λ` even though the
//! optimal price jumps, which is what makes bisection applicable.

use serde::Serialize;

use crate::demand::piecewise_profit;
use crate::error::Result;
use crate::model::{ModelParams, Quality};
use crate::oracle::{bisect_threshold, find_threshold, DEFAULT_TOL};

/// `v̄′`: above it the naive market pools again at full coverage.
pub const V_BAR_PRIME: f64 = 5.0 / 9.0;

/// Searches in `h` start just above one half. At `h = 0.5` every signal is
/// uninformative and all level profits coincide, so each difference would
/// be an exact zero there.
pub(crate) const H_BRACKET: (f64, f64) = (0.5 + 1e-9, 1.0);

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThresholdSet {
    #[serde(rename = "v_B")]
    pub v_b: f64,
    pub lambda: f64,
    pub h: f64,
    /// `h*(λ)` at the given `λ`: above it the firm stops serving the low end.
    pub h_star: Option<f64>,
    /// `h*(1)` and `h*(0)`.
    pub h_star_sophisticated: Option<f64>,
    pub h_star_naive: Option<f64>,
    /// Largest `h` at which WTP level 1, 2, 3 is optimal; `None` when the
    /// level is never optimal at this `λ`.
    pub h_hat1: Option<f64>,
    pub h_hat2: Option<f64>,
    pub h_hat3: Option<f64>,
    pub lambda_hat1: Option<f64>,
    pub lambda_hat2: Option<f64>,
    pub lambda_hat3: Option<f64>,
    /// `λ̄(h)` at the given `h`.
    pub lambda_bar: Option<f64>,
    pub v_bar: f64,
    pub v_bar_prime: f64,
    /// Precisions where the high type switches between preferring a naive
    /// and a sophisticated market.
    pub h_underline: Option<f64>,
    pub h_overline: Option<f64>,
}

fn params(h: f64, lambda: f64, v_b: f64) -> ModelParams {
    ModelParams::new(h.clamp(0.5, 1.0), lambda.clamp(0.0, 1.0), v_b)
        .expect("threshold search stays in the parameter domain")
}

pub(crate) fn level_profits(h: f64, lambda: f64, v_b: f64, quality: Quality) -> [f64; 5] {
    piecewise_profit(&params(h, lambda, v_b), quality)
        .expect("base model")
        .level_profits()
}

fn good(h: f64, lambda: f64, v_b: f64) -> [f64; 5] {
    level_profits(h, lambda, v_b, Quality::Good)
}

fn max_over(p: &[f64; 5], levels: std::ops::RangeInclusive<usize>) -> f64 {
    levels.map(|k| p[k - 1]).fold(f64::NEG_INFINITY, f64::max)
}

/// `h*(λ)`: where the best low-end price (levels 1–2) is overtaken by the
/// best high-end price (levels 3–5). `None` when the low end stays optimal.
pub fn h_star(lambda: f64, v_b: f64) -> Result<Option<f64>> {
    ModelParams::new(0.5, lambda, v_b)?;
    let f = |h: f64| {
        let p = good(h, lambda, v_b);
        max_over(&p, 1..=2) - max_over(&p, 3..=5)
    };
    Ok(find_threshold(f, H_BRACKET, DEFAULT_TOL)?)
}

/// Upper end of the set of `h` where level `k` is optimal, or `None` if
/// that set is empty. Higher prices take over as `h` grows, so the set is an
/// interval entered when `k` overtakes the lower levels.
fn h_hat(k: usize, lambda: f64, v_b: f64) -> Result<Option<f64>> {
    let below = |h: f64| {
        let p = good(h, lambda, v_b);
        if k == 1 {
            0.0
        } else {
            p[k - 1] - max_over(&p, 1..=k - 1)
        }
    };
    let above = |h: f64| {
        let p = good(h, lambda, v_b);
        p[k - 1] - max_over(&p, k + 1..=5)
    };
    let enter = if below(H_BRACKET.0) >= 0.0 {
        H_BRACKET.0
    } else {
        match find_threshold(below, H_BRACKET, DEFAULT_TOL)? {
            Some(h) => h,
            None => return Ok(None),
        }
    };
    if above(enter) < 0.0 {
        return Ok(None);
    }
    if above(1.0) >= 0.0 || enter == 1.0 {
        return Ok(Some(1.0));
    }
    Ok(Some(bisect_threshold(above, (enter, 1.0), DEFAULT_TOL)?))
}

pub fn h_hats(lambda: f64, v_b: f64) -> Result<[Option<f64>; 3]> {
    ModelParams::new(0.5, lambda, v_b)?;
    Ok([h_hat(1, lambda, v_b)?, h_hat(2, lambda, v_b)?, h_hat(3, lambda, v_b)?])
}

/// `h` at which level `from` is overtaken by the best of the higher levels,
/// ignoring whether `from` was optimal to begin with.
fn overtaken(from: usize, lambda: f64, v_b: f64) -> Result<f64> {
    let f = |h: f64| {
        let p = good(h, lambda, v_b);
        p[from - 1] - max_over(&p, from + 1..=5)
    };
    Ok(find_threshold(f, H_BRACKET, DEFAULT_TOL)?.unwrap_or(if f(1.0) >= 0.0 { 1.0 } else { H_BRACKET.0 }))
}

/// Boundaries in `λ` between the four orderings of optimal prices as `h`
/// rises.
///
/// Below `λ̂1` level 2 gives way directly to level 4; above it level 3
/// appears in between. Above `λ̂2` level 3 stays optimal up to `h = 1`.
/// Above `λ̂3` level 2 is never optimal and level 1 gives way to level 3.
pub fn lambda_hats(v_b: f64) -> Result<[Option<f64>; 3]> {
    ModelParams::new(0.5, 0.0, v_b)?;
    let l1 = |lambda: f64| -> f64 {
        let h = overtaken(2, lambda, v_b).unwrap_or(0.5);
        let p = good(h, lambda, v_b);
        p[2] - p[3]
    };
    let l2 = |lambda: f64| {
        let p = good(1.0, lambda, v_b);
        p[2] - p[3]
    };
    let l3 = |lambda: f64| -> f64 {
        let h = overtaken(1, lambda, v_b).unwrap_or(0.5);
        let p = good(h, lambda, v_b);
        max_over(&p, 3..=5) - p[1]
    };
    Ok([
        find_threshold(l1, (0.0, 1.0), DEFAULT_TOL)?,
        find_threshold(l2, (0.0, 1.0), DEFAULT_TOL)?,
        find_threshold(l3, (0.0, 1.0), DEFAULT_TOL)?,
    ])
}

/// `λ̄(h)`: up to it the naive-targeted prices (levels 2 and 4) are optimal
/// and profit falls with `λ`; above it the prices aimed at sophisticated
/// consumers take over. Equals 1 when the naive prices win for every `λ`.
pub fn lambda_bar(h: f64, v_b: f64) -> Result<Option<f64>> {
    ModelParams::new(h, 0.0, v_b)?;
    let f = |lambda: f64| {
        let p = good(h, lambda, v_b);
        p[0].max(p[2]).max(p[4]) - p[1].max(p[3])
    };
    if f(1.0) < 0.0 {
        return Ok(Some(1.0));
    }
    Ok(find_threshold(f, (0.0, 1.0), DEFAULT_TOL)?)
}

/// Lowest low-type pooling profit at `h = 1` over all `λ`, counting both
/// sides of every price switch.
fn low_type_floor(v_b: f64) -> Result<f64> {
    let mut lambdas = vec![0.0, 1.0];
    for i in 1..=5usize {
        for j in i + 1..=5 {
            let f = |lambda: f64| {
                let p = good(1.0, lambda, v_b);
                p[i - 1] - p[j - 1]
            };
            if let Some(l) = find_threshold(f, (0.0, 1.0), DEFAULT_TOL)? {
                lambdas.push(l);
            }
        }
    }
    let mut floor = f64::INFINITY;
    for lambda in lambdas {
        let g = good(1.0, lambda, v_b);
        let b = level_profits(1.0, lambda, v_b, Quality::Bad);
        let top = max_over(&g, 1..=5);
        // Level 5 only ever ties for the optimum, and ties go to the lower
        // price, so it never sets the pooling price.
        for k in 0..4 {
            if g[k] >= top - 1e-9 {
                floor = floor.min(b[k]);
            }
        }
    }
    Ok(floor)
}

/// `v̄`: the fixed point `v = min_λ Π̃_L(1, λ; v)`. Pooling exists for every
/// `(h, λ)` once `v_B ≤ v̄`.
pub fn v_bar() -> Result<f64> {
    let mut v = 0.0;
    for _ in 0..500 {
        let next = low_type_floor(v)?;
        if (next - v).abs() < 1e-14 {
            return Ok(next);
        }
        v = next;
    }
    Ok(v)
}

/// `h̲`: full coverage of a naive market stops beating the level-3 price
/// of a sophisticated market.
pub fn h_underline(v_b: f64) -> Result<Option<f64>> {
    ModelParams::new(0.5, 0.0, v_b)?;
    let f = |h: f64| good(h, 0.0, v_b)[1] - good(h, 1.0, v_b)[2];
    Ok(find_threshold(f, H_BRACKET, DEFAULT_TOL)?)
}

/// `h̄`: the level-4 price of a naive market overtakes the level-3 price of
/// a sophisticated market.
pub fn h_overline(v_b: f64) -> Result<Option<f64>> {
    ModelParams::new(0.5, 0.0, v_b)?;
    let f = |h: f64| good(h, 0.0, v_b)[3] - good(h, 1.0, v_b)[2];
    Ok(find_threshold(f, H_BRACKET, DEFAULT_TOL)?)
}

pub fn thresholds(p: &ModelParams) -> Result<ThresholdSet> {
    p.require_base("thresholds")?;
    let (h, lambda, v_b) = (p.h(), p.lambda(), p.v_b());
    let [h_hat1, h_hat2, h_hat3] = h_hats(lambda, v_b)?;
    let [lambda_hat1, lambda_hat2, lambda_hat3] = lambda_hats(v_b)?;
    Ok(ThresholdSet {
        v_b,
        lambda,
        h,
        h_star: h_star(lambda, v_b)?,
        h_star_sophisticated: h_star(1.0, v_b)?,
        h_star_naive: h_star(0.0, v_b)?,
        h_hat1,
        h_hat2,
        h_hat3,
        lambda_hat1,
        lambda_hat2,
        lambda_hat3,
        lambda_bar: lambda_bar(h, v_b)?,
        v_bar: v_bar()?,
        v_bar_prime: V_BAR_PRIME,
        h_underline: h_underline(v_b)?,
        h_overline: h_overline(v_b)?,
    })
}

/// `h*(1)` from its defining equation `p_1 = (1 + h)/2 · p_3`.
pub fn h_star_sophisticated_closed_form(v_b: f64) -> f64 {
    (3.0 - v_b) / (5.0 - 3.0 * v_b)
}

/// `h*(0)` from its defining equation `p_2 = (1 + 2h)/4 · p_4`.
pub fn h_star_naive_closed_form(v_b: f64) -> f64 {
    let a = 3.0 - v_b;
    (-a + (a * a + (1.0 - v_b) * (11.0 + v_b)).sqrt()) / (2.0 * (1.0 - v_b))
}

pub fn h_underline_closed_form(v_b: f64) -> f64 {
    2.0 / (3.0 - v_b)
}

pub fn h_overline_closed_form(v_b: f64) -> f64 {
    ((3.0 + v_b) / (4.0 * (1.0 - v_b))).sqrt()
}

/// Root of `7v² + 10v − 1`.
pub fn v_bar_closed_form() -> f64 {
    (-5.0 + 32f64.sqrt()) / 7.0
}
