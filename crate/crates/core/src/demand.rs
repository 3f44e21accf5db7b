//! Willingness-to-pay schedule, expected demand and piecewise profit.
//!
//! Every consumer buys when her reservation value is at least the price, so
//! demand is a step function of price with at most five steps. The steps sit
//! at the five WTP levels, ordered from a sophisticated consumer holding a
//! precise bad signal up to one holding a precise good signal.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{posterior_with_prior, signal_distribution, ConsumerType, ModelParams, Quality, Signal};

/// Consumer segment behind each WTP level, lowest level first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConsumerLabel {
    SophBadHigh,
    NaiveBad,
    SophLowPrecision,
    NaiveGood,
    SophGoodHigh,
}

impl ConsumerLabel {
    pub const ALL: [ConsumerLabel; 5] = [
        ConsumerLabel::SophBadHigh,
        ConsumerLabel::NaiveBad,
        ConsumerLabel::SophLowPrecision,
        ConsumerLabel::NaiveGood,
        ConsumerLabel::SophGoodHigh,
    ];

    /// Relative WTP level, 1 through 5.
    pub fn level(self) -> u8 {
        self as u8 + 1
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ConsumerLabel::SophBadHigh => "soph-bad-high",
            ConsumerLabel::NaiveBad => "naive-bad",
            ConsumerLabel::SophLowPrecision => "soph-low-precision",
            ConsumerLabel::NaiveGood => "naive-good",
            ConsumerLabel::SophGoodHigh => "soph-good-high",
        }
    }

    fn consumer(self) -> ConsumerType {
        match self {
            ConsumerLabel::NaiveBad | ConsumerLabel::NaiveGood => ConsumerType::Naive,
            _ => ConsumerType::Sophisticated,
        }
    }

    /// Signals pooled into this segment.
    fn signals(self) -> &'static [Signal] {
        match self {
            ConsumerLabel::SophBadHigh => &[Signal::BAD_HIGH],
            ConsumerLabel::NaiveBad => &[Signal::BAD_HIGH, Signal::BAD_LOW],
            ConsumerLabel::SophLowPrecision => &[Signal::BAD_LOW, Signal::GOOD_LOW],
            ConsumerLabel::NaiveGood => &[Signal::GOOD_HIGH, Signal::GOOD_LOW],
            ConsumerLabel::SophGoodHigh => &[Signal::GOOD_HIGH],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WtpLevel {
    #[serde(rename = "consumer_label")]
    pub label: ConsumerLabel,
    pub wtp: f64,
    #[serde(rename = "mass_G")]
    pub mass_g: f64,
    #[serde(rename = "mass_B")]
    pub mass_b: f64,
}

impl WtpLevel {
    pub fn mass(&self, quality: Quality) -> f64 {
        match quality {
            Quality::Good => self.mass_g,
            Quality::Bad => self.mass_b,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WtpSchedule {
    #[serde(rename = "v_B")]
    v_b: f64,
    levels: [WtpLevel; 5],
}

impl WtpSchedule {
    pub fn levels(&self) -> &[WtpLevel; 5] {
        &self.levels
    }

    pub fn level(&self, level: u8) -> &WtpLevel {
        &self.levels[usize::from(level - 1)]
    }

    pub fn wtps(&self) -> [f64; 5] {
        self.levels.map(|l| l.wtp)
    }

    pub fn v_b(&self) -> f64 {
        self.v_b
    }

    /// Mass of consumers with WTP at least `price`, without range checks.
    pub(crate) fn demand_at(&self, price: f64, quality: Quality) -> f64 {
        self.levels
            .iter()
            .filter(|l| l.wtp >= price)
            .map(|l| l.mass(quality))
            .sum()
    }
}

/// Five-level schedule for any admissible variant, including a general
/// precision mix `gamma` and prior `mu0`.
///
/// Masses are the consumer-type share times `Pr(σ | Q)` summed over the
/// signals a segment pools. Reservation values come from the general-prior
/// posterior, which reduces bit for bit to the base-model tables at
/// `mu0 = 0.5`.
pub fn market_schedule(params: &ModelParams) -> WtpSchedule {
    let good = signal_distribution(params, Quality::Good);
    let bad = signal_distribution(params, Quality::Bad);
    let levels = ConsumerLabel::ALL.map(|label| {
        let consumer = label.consumer();
        let share = match consumer {
            ConsumerType::Sophisticated => params.lambda(),
            ConsumerType::Naive => 1.0 - params.lambda(),
        };
        let signals = label.signals();
        let mu = posterior_with_prior(params, consumer, signals[0]);
        WtpLevel {
            label,
            wtp: params.wtp(mu),
            mass_g: share * signals.iter().map(|&s| good.prob(s)).sum::<f64>(),
            mass_b: share * signals.iter().map(|&s| bad.prob(s)).sum::<f64>(),
        }
    });
    WtpSchedule {
        v_b: params.v_b(),
        levels,
    }
}

/// Base-model schedule.
pub fn build_wtp_schedule(params: &ModelParams) -> Result<WtpSchedule> {
    params.require_base("the WTP schedule")?;
    Ok(market_schedule(params))
}

/// Mass of consumers buying at `price`. Indifferent consumers buy.
pub fn expected_demand(schedule: &WtpSchedule, price: f64, quality: Quality) -> Result<f64> {
    if !(0.0..=1.0).contains(&price) {
        return Err(Error::PriceOutOfRange(price));
    }
    Ok(schedule.demand_at(price, quality))
}

/// The five WTP levels followed by `v_B`; every other price is dominated.
pub fn candidate_prices(schedule: &WtpSchedule) -> [f64; 6] {
    let w = schedule.wtps();
    [w[0], w[1], w[2], w[3], w[4], schedule.v_b]
}

/// One interval of constant demand, `(lower, upper]` (closed at zero).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Piece {
    pub lower: f64,
    pub upper: f64,
    pub multiplier: f64,
}

/// Expected profit `p · D(p)` for one quality as a step-demand function.
///
/// Piece `i` covers prices in `(p_{i-1}, p_i]` with `p_0 = 0` and demand
/// `multipliers[i]`; above `p_5` nobody buys.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PiecewiseProfit {
    pub quality: Quality,
    pub breakpoints: [f64; 5],
    pub multipliers: [f64; 5],
}

impl PiecewiseProfit {
    pub fn multiplier(&self, price: f64) -> f64 {
        self.breakpoints
            .iter()
            .position(|&b| price <= b)
            .map_or(0.0, |i| self.multipliers[i])
    }

    pub fn eval(&self, price: f64) -> f64 {
        price * self.multiplier(price)
    }

    /// Profit when the price sits exactly at level `i` (1-based). Continuous
    /// in the parameters, unlike the optimum itself.
    pub fn level_profit(&self, level: u8) -> f64 {
        let i = usize::from(level - 1);
        self.breakpoints[i] * self.multipliers[i]
    }

    pub fn level_profits(&self) -> [f64; 5] {
        [1, 2, 3, 4, 5].map(|l| self.level_profit(l))
    }

    /// Pieces after dropping empty intervals and zero demand and merging
    /// neighbours with equal demand.
    pub fn effective_pieces(&self) -> Vec<Piece> {
        let mut pieces: Vec<Piece> = Vec::new();
        let mut lower = 0.0;
        for (&upper, &multiplier) in self.breakpoints.iter().zip(&self.multipliers) {
            if upper > lower {
                if multiplier > 0.0 {
                    match pieces.last_mut() {
                        Some(last) if last.multiplier == multiplier => last.upper = upper,
                        _ => pieces.push(Piece {
                            lower,
                            upper,
                            multiplier,
                        }),
                    }
                }
                lower = upper;
            }
        }
        pieces
    }
}

/// Closed-form piecewise profit of the base model.
pub fn piecewise_profit(params: &ModelParams, quality: Quality) -> Result<PiecewiseProfit> {
    let schedule = build_wtp_schedule(params)?;
    let h = params.h();
    let lam = params.lambda();
    let multipliers = match quality {
        Quality::Good => [
            1.0,
            1.0 - (1.0 - h) * lam / 2.0,
            (1.0 + 2.0 * h) / 4.0 + lam / 4.0,
            (1.0 + 2.0 * h) / 4.0 - lam / 4.0,
            h * lam / 2.0,
        ],
        Quality::Bad => [
            1.0,
            1.0 - h * lam / 2.0,
            (3.0 - 2.0 * h) / 4.0 + lam / 4.0,
            (3.0 - 2.0 * h) / 4.0 - lam / 4.0,
            (1.0 - h) * lam / 2.0,
        ],
    };
    Ok(PiecewiseProfit {
        quality,
        breakpoints: schedule.wtps(),
        multipliers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn params(h: f64, lambda: f64, v_b: f64) -> ModelParams {
        ModelParams::new(h, lambda, v_b).unwrap()
    }

    #[test]
    fn schedule_example_sophisticated() {
        let s = build_wtp_schedule(&params(0.8, 1.0, 0.1)).unwrap();
        let expect_wtp = [0.28, 0.415, 0.55, 0.685, 0.82];
        let expect_g = [0.1, 0.0, 0.5, 0.0, 0.4];
        for (i, level) in s.levels().iter().enumerate() {
            assert_abs_diff_eq!(level.wtp, expect_wtp[i], epsilon = 1e-12);
            assert_abs_diff_eq!(level.mass_g, expect_g[i], epsilon = 1e-12);
            assert_abs_diff_eq!(level.mass_b, expect_g[4 - i], epsilon = 1e-12);
        }
    }

    #[test]
    fn schedule_collapses_at_uninformative_precision() {
        for lambda in [0.0, 0.3, 1.0] {
            let s = build_wtp_schedule(&params(0.5, lambda, 0.2)).unwrap();
            for l in s.levels() {
                assert_abs_diff_eq!(l.wtp, 0.6, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn schedule_example_naive_boundary() {
        let s = build_wtp_schedule(&params(1.0, 0.0, 0.0)).unwrap();
        let expect_wtp = [0.0, 0.25, 0.5, 0.75, 1.0];
        let expect_g = [0.0, 0.25, 0.0, 0.75, 0.0];
        for (i, level) in s.levels().iter().enumerate() {
            assert_abs_diff_eq!(level.wtp, expect_wtp[i], epsilon = 1e-12);
            assert_abs_diff_eq!(level.mass_g, expect_g[i], epsilon = 1e-12);
        }
    }

    #[test]
    fn schedule_rejects_extensions() {
        let p = params(0.8, 0.0, 0.0).with_gamma(0.7).unwrap();
        assert!(matches!(build_wtp_schedule(&p), Err(Error::UnsupportedVariant(_))));
        assert!(piecewise_profit(&p, Quality::Good).is_err());
    }

    #[test]
    fn demand_examples() {
        let s = build_wtp_schedule(&params(0.8, 1.0, 0.1)).unwrap();
        assert_abs_diff_eq!(expected_demand(&s, 0.55, Quality::Good).unwrap(), 0.9, epsilon = 1e-12);
        assert_eq!(expected_demand(&s, 0.0, Quality::Bad).unwrap(), 1.0);
        assert_eq!(expected_demand(&s, 1.0, Quality::Good).unwrap(), 0.0);
        assert!(matches!(
            expected_demand(&s, 1.0 + 1e-9, Quality::Good),
            Err(Error::PriceOutOfRange(_))
        ));
        assert!(expected_demand(&s, -0.1, Quality::Good).is_err());

        let top = build_wtp_schedule(&params(1.0, 1.0, 0.1)).unwrap();
        assert_abs_diff_eq!(expected_demand(&top, 1.0, Quality::Good).unwrap(), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn candidates_end_with_v_b() {
        let s = build_wtp_schedule(&params(0.8, 0.4, 0.1)).unwrap();
        let c = candidate_prices(&s);
        assert_eq!(c[5], 0.1);
        assert_eq!(&c[..5], &s.wtps());
    }

    #[test]
    fn naive_market_has_two_pieces() {
        let p = piecewise_profit(&params(0.8, 0.0, 0.1), Quality::Good).unwrap();
        let pieces = p.effective_pieces();
        assert_eq!(pieces.len(), 2);
        assert_eq!(pieces[0].multiplier, 1.0);
        assert_abs_diff_eq!(pieces[0].upper, 0.415, epsilon = 1e-12);
        assert_abs_diff_eq!(pieces[1].multiplier, 0.65, epsilon = 1e-12);
        assert_abs_diff_eq!(pieces[1].upper, 0.685, epsilon = 1e-12);
    }

    #[test]
    fn uninformative_precision_has_one_piece() {
        let p = piecewise_profit(&params(0.5, 0.6, 0.1), Quality::Bad).unwrap();
        let pieces = p.effective_pieces();
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].multiplier, 1.0);
        assert_abs_diff_eq!(pieces[0].upper, 0.55, epsilon = 1e-15);
    }

    #[test]
    fn bad_quality_multiplier_at_level_three() {
        let p = piecewise_profit(&params(0.9, 0.5, 0.1), Quality::Bad).unwrap();
        assert_abs_diff_eq!(p.multiplier(0.55), 0.425, epsilon = 1e-12);
    }

    #[test]
    fn piecewise_json_shape() {
        let p = piecewise_profit(&params(0.8, 0.5, 0.1), Quality::Good).unwrap();
        let v: serde_json::Value = serde_json::to_value(p).unwrap();
        assert_eq!(v["quality"], "G");
        assert_eq!(v["breakpoints"].as_array().unwrap().len(), 5);
        let s = serde_json::to_value(build_wtp_schedule(&params(0.8, 0.5, 0.1)).unwrap()).unwrap();
        assert_eq!(s["levels"][2]["consumer_label"], "soph-low-precision");
        assert!(s["levels"][0]["mass_G"].is_number());
    }

    fn valid() -> impl Strategy<Value = ModelParams> {
        (0.5f64..=1.0, 0.0f64..=1.0, 0.0f64..0.999).prop_map(|(h, l, v)| params(h, l, v))
    }

    proptest! {
        #[test]
        fn masses_conserve(p in valid()) {
            let s = build_wtp_schedule(&p).unwrap();
            let g: f64 = s.levels().iter().map(|l| l.mass_g).sum();
            let b: f64 = s.levels().iter().map(|l| l.mass_b).sum();
            prop_assert!((g - 1.0).abs() < 1e-12);
            prop_assert!((b - 1.0).abs() < 1e-12);
            for k in 0..5 {
                prop_assert!((s.levels()[k].mass_g - s.levels()[4 - k].mass_b).abs() < 1e-15);
            }
        }

        #[test]
        fn schedule_matches_closed_forms(p in valid()) {
            let s = build_wtp_schedule(&p).unwrap();
            let (h, v, lam) = (p.h(), p.v_b(), p.lambda());
            let wbar = (1.0 + 2.0 * h) / 4.0;
            let w = [1.0 - h + h * v, 1.0 - wbar + wbar * v, 0.5 * (1.0 + v), wbar + (1.0 - wbar) * v, h + (1.0 - h) * v];
            let m = [lam * (1.0 - h) / 2.0, (1.0 - lam) * (3.0 - 2.0 * h) / 4.0, lam / 2.0, (1.0 - lam) * (1.0 + 2.0 * h) / 4.0, lam * h / 2.0];
            for k in 0..5 {
                prop_assert!((s.levels()[k].wtp - w[k]).abs() < 1e-12);
                prop_assert!((s.levels()[k].mass_g - m[k]).abs() < 1e-12);
            }
            for k in 0..4 {
                prop_assert!(s.levels()[k].wtp <= s.levels()[k + 1].wtp);
                if h > 0.5 {
                    prop_assert!(s.levels()[k].wtp < s.levels()[k + 1].wtp);
                }
            }
        }

        #[test]
        fn piecewise_equals_price_times_demand(p in valid(), price in 0.0f64..=1.0, good in any::<bool>()) {
            let q = if good { Quality::Good } else { Quality::Bad };
            let s = build_wtp_schedule(&p).unwrap();
            let pw = piecewise_profit(&p, q).unwrap();
            let direct = price * expected_demand(&s, price, q).unwrap();
            prop_assert!((pw.eval(price) - direct).abs() <= 1e-12);
            for w in s.wtps() {
                let at = w * expected_demand(&s, w, q).unwrap();
                prop_assert!((pw.eval(w) - at).abs() <= 1e-12);
            }
        }

        #[test]
        fn multipliers_non_increasing(p in valid(), good in any::<bool>()) {
            let q = if good { Quality::Good } else { Quality::Bad };
            let pw = piecewise_profit(&p, q).unwrap();
            for k in 0..4 {
                prop_assert!(pw.multipliers[k] + 1e-15 >= pw.multipliers[k + 1]);
            }
        }

        #[test]
        fn dispersion_grows_with_precision(h in 0.5f64..0.999, dh in 1e-3f64..0.1, lam in 0.0f64..=1.0, v in 0.0f64..0.99) {
            let h2 = (h + dh).min(1.0);
            let a = build_wtp_schedule(&params(h, lam, v)).unwrap().wtps();
            let b = build_wtp_schedule(&params(h2, lam, v)).unwrap().wtps();
            prop_assert!(b[4] - b[0] > a[4] - a[0]);
        }

        #[test]
        fn mass_shifts_with_precision(h in 0.5f64..0.999, dh in 1e-3f64..0.1, lam in 0.0f64..=1.0) {
            let h2 = (h + dh).min(1.0);
            let a = build_wtp_schedule(&params(h, lam, 0.1)).unwrap();
            let b = build_wtp_schedule(&params(h2, lam, 0.1)).unwrap();
            let top = |s: &WtpSchedule, q| s.levels()[3].mass(q) + s.levels()[4].mass(q);
            let bottom = |s: &WtpSchedule, q| s.levels()[0].mass(q) + s.levels()[1].mass(q);
            prop_assert!(top(&b, Quality::Good) + 1e-15 >= top(&a, Quality::Good));
            prop_assert!(bottom(&b, Quality::Good) <= bottom(&a, Quality::Good) + 1e-15);
            prop_assert!(top(&b, Quality::Bad) <= top(&a, Quality::Bad) + 1e-15);
            prop_assert!(bottom(&b, Quality::Bad) + 1e-15 >= bottom(&a, Quality::Bad));
        }
    }
}
