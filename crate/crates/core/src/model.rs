//! Model primitives and consumers' posterior beliefs about product quality.
//!
//! Quality is `G` or `B`. Each consumer sees one private signal made of a
//! valence (`g`/`b`) and a precision (`h`/`l`). The valence matches the true
//! quality with probability equal to the precision, and the precision is high
//! with probability `gamma`. Sophisticated consumers see the precision.
//! Naive consumers see only the valence and use the average precision
//! `w̄ = gamma·h + (1 − gamma)·l` for every signal.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Quality {
    #[serde(rename = "G")]
    Good,
    #[serde(rename = "B")]
    Bad,
}

impl Quality {
    pub const ALL: [Quality; 2] = [Quality::Good, Quality::Bad];
}

impl fmt::Display for Quality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quality::Good => "G",
            Quality::Bad => "B",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Valence {
    Good,
    Bad,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Precision {
    High,
    Low,
}

/// One of the four signals `σ_{q,w}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signal {
    pub valence: Valence,
    pub precision: Precision,
}

impl Signal {
    pub const GOOD_HIGH: Signal = Signal::new(Valence::Good, Precision::High);
    pub const GOOD_LOW: Signal = Signal::new(Valence::Good, Precision::Low);
    pub const BAD_HIGH: Signal = Signal::new(Valence::Bad, Precision::High);
    pub const BAD_LOW: Signal = Signal::new(Valence::Bad, Precision::Low);

    pub const ALL: [Signal; 4] = [Signal::GOOD_HIGH, Signal::GOOD_LOW, Signal::BAD_HIGH, Signal::BAD_LOW];

    pub const fn new(valence: Valence, precision: Precision) -> Self {
        Signal { valence, precision }
    }

    fn index(self) -> usize {
        match (self.valence, self.precision) {
            (Valence::Good, Precision::High) => 0,
            (Valence::Good, Precision::Low) => 1,
            (Valence::Bad, Precision::High) => 2,
            (Valence::Bad, Precision::Low) => 3,
        }
    }
}

impl fmt::Display for Signal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = match self.valence {
            Valence::Good => 'g',
            Valence::Bad => 'b',
        };
        let w = match self.precision {
            Precision::High => 'h',
            Precision::Low => 'l',
        };
        write!(f, "σ_{{{q},{w}}}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConsumerType {
    Sophisticated,
    Naive,
}

/// Exogenous primitives of the game.
///
/// Validated on construction, so every operation taking a `ModelParams`
/// may assume the domain invariants hold.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct ModelParams {
    h: f64,
    l: f64,
    lambda: f64,
    v_b: f64,
    v_g: f64,
    gamma: f64,
    mu0: f64,
}

/// Unvalidated wire form of [`ModelParams`]; missing fields take their
/// base-model values.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
struct RawParams {
    h: f64,
    #[serde(default = "half")]
    l: f64,
    lambda: f64,
    #[serde(rename = "v_B")]
    v_b: f64,
    #[serde(rename = "v_G", default = "one")]
    v_g: f64,
    #[serde(default = "half")]
    gamma: f64,
    #[serde(default = "half")]
    mu0: f64,
}

fn half() -> f64 {
    0.5
}

fn one() -> f64 {
    1.0
}

impl TryFrom<RawParams> for ModelParams {
    type Error = Error;

    fn try_from(raw: RawParams) -> Result<Self> {
        ModelParams::from_parts(raw.h, raw.l, raw.lambda, raw.v_b, raw.v_g, raw.gamma, raw.mu0)
    }
}

impl From<ModelParams> for RawParams {
    fn from(p: ModelParams) -> Self {
        RawParams {
            h: p.h,
            l: p.l,
            lambda: p.lambda,
            v_b: p.v_b,
            v_g: p.v_g,
            gamma: p.gamma,
            mu0: p.mu0,
        }
    }
}

fn invalid(name: &'static str, value: f64, reason: &'static str) -> Error {
    Error::InvalidParameter { name, value, reason }
}

impl ModelParams {
    /// Base model: `l = 0.5`, `v_G = 1`, `gamma = 0.5`, `mu0 = 0.5`.
    pub fn new(h: f64, lambda: f64, v_b: f64) -> Result<Self> {
        Self::from_parts(h, 0.5, lambda, v_b, 1.0, 0.5, 0.5)
    }

    pub fn from_parts(h: f64, l: f64, lambda: f64, v_b: f64, v_g: f64, gamma: f64, mu0: f64) -> Result<Self> {
        if l != 0.5 {
            return Err(invalid("l", l, "low precision must equal 0.5"));
        }
        // h = 0.5 is admitted as the uninformative boundary.
        if !(0.5..=1.0).contains(&h) {
            return Err(invalid("h", h, "high precision must lie in [0.5, 1]"));
        }
        if v_g != 1.0 {
            return Err(invalid("v_G", v_g, "good-quality value is normalized to 1"));
        }
        if !(0.0..1.0).contains(&v_b) {
            return Err(invalid("v_B", v_b, "bad-quality value must lie in [0, 1)"));
        }
        if !(0.0..=1.0).contains(&lambda) {
            return Err(invalid(
                "lambda",
                lambda,
                "share of sophisticated consumers must lie in [0, 1]",
            ));
        }
        if !(gamma > 0.0 && gamma < 1.0) {
            return Err(invalid("gamma", gamma, "Pr(w = h) must lie in (0, 1)"));
        }
        if !(0.0..=1.0).contains(&mu0) {
            return Err(invalid("mu0", mu0, "prior must lie in [0, 1]"));
        }
        Ok(ModelParams {
            h,
            l,
            lambda,
            v_b,
            v_g,
            gamma,
            mu0,
        })
    }

    pub fn with_h(self, h: f64) -> Result<Self> {
        Self::from_parts(h, self.l, self.lambda, self.v_b, self.v_g, self.gamma, self.mu0)
    }

    pub fn with_lambda(self, lambda: f64) -> Result<Self> {
        Self::from_parts(self.h, self.l, lambda, self.v_b, self.v_g, self.gamma, self.mu0)
    }

    pub fn with_v_b(self, v_b: f64) -> Result<Self> {
        Self::from_parts(self.h, self.l, self.lambda, v_b, self.v_g, self.gamma, self.mu0)
    }

    pub fn with_gamma(self, gamma: f64) -> Result<Self> {
        Self::from_parts(self.h, self.l, self.lambda, self.v_b, self.v_g, gamma, self.mu0)
    }

    pub fn with_mu0(self, mu0: f64) -> Result<Self> {
        Self::from_parts(self.h, self.l, self.lambda, self.v_b, self.v_g, self.gamma, mu0)
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn l(&self) -> f64 {
        self.l
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn v_b(&self) -> f64 {
        self.v_b
    }

    pub fn v_g(&self) -> f64 {
        self.v_g
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn mu0(&self) -> f64 {
        self.mu0
    }

    /// `gamma = 0.5` and `mu0 = 0.5`.
    pub fn is_base(&self) -> bool {
        self.gamma == 0.5 && self.mu0 == 0.5
    }

    pub(crate) fn require_base(&self, what: &str) -> Result<()> {
        if self.is_base() {
            Ok(())
        } else {
            Err(Error::UnsupportedVariant(format!(
                "{what} needs gamma = 0.5 and mu0 = 0.5 (got gamma = {}, mu0 = {})",
                self.gamma, self.mu0
            )))
        }
    }

    pub fn precision(&self, precision: Precision) -> f64 {
        match precision {
            Precision::High => self.h,
            Precision::Low => self.l,
        }
    }

    pub fn precision_prob(&self, precision: Precision) -> f64 {
        match precision {
            Precision::High => self.gamma,
            Precision::Low => 1.0 - self.gamma,
        }
    }

    /// Reservation value at posterior `mu`: `mu·v_G + (1 − mu)·v_B`.
    pub fn wtp(&self, mu: f64) -> f64 {
        mu * self.v_g + (1.0 - mu) * self.v_b
    }
}

/// `w̄ = gamma·h + (1 − gamma)·l`.
pub fn average_precision(params: &ModelParams) -> f64 {
    params.gamma * params.h + (1.0 - params.gamma) * params.l
}

/// `Pr(q | Q; w)`: valence matches the quality with probability `w`.
pub fn valence_likelihood(params: &ModelParams, signal: Signal, quality: Quality) -> f64 {
    let w = params.precision(signal.precision);
    let matches = matches!(
        (signal.valence, quality),
        (Valence::Good, Quality::Good) | (Valence::Bad, Quality::Bad)
    );
    if matches {
        w
    } else {
        1.0 - w
    }
}

/// `Pr(q | Q)` with the precision integrated out, which equals `w̄` when the
/// valence matches the quality.
pub fn naive_likelihood(params: &ModelParams, valence: Valence, quality: Quality) -> f64 {
    let wbar = average_precision(params);
    let matches = matches!(
        (valence, quality),
        (Valence::Good, Quality::Good) | (Valence::Bad, Quality::Bad)
    );
    if matches {
        wbar
    } else {
        1.0 - wbar
    }
}

/// Distribution of the four signals conditional on the true quality.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SignalDistribution {
    quality: Quality,
    probs: [f64; 4],
}

impl SignalDistribution {
    pub fn quality(&self) -> Quality {
        self.quality
    }

    pub fn prob(&self, signal: Signal) -> f64 {
        self.probs[signal.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Signal, f64)> + '_ {
        Signal::ALL.iter().map(move |&s| (s, self.prob(s)))
    }

    /// Probability of a valence with the precision marginalized out.
    pub fn valence_prob(&self, valence: Valence) -> f64 {
        self.prob(Signal::new(valence, Precision::High)) + self.prob(Signal::new(valence, Precision::Low))
    }
}

/// `Pr(σ_{q,w} | Q) = Pr(q | Q; w) · Pr(w)`.
pub fn signal_distribution(params: &ModelParams, quality: Quality) -> SignalDistribution {
    let mut probs = [0.0; 4];
    for s in Signal::ALL {
        probs[s.index()] = valence_likelihood(params, s, quality) * params.precision_prob(s.precision);
    }
    SignalDistribution { quality, probs }
}

fn bayes(prior: f64, like_good: f64, like_bad: f64) -> f64 {
    // Degenerate priors are absorbing, including at perfectly revealing
    // signals where both joint terms vanish.
    if prior == 0.0 {
        return 0.0;
    }
    if prior == 1.0 {
        return 1.0;
    }
    let joint_good = prior * like_good;
    joint_good / (joint_good + (1.0 - prior) * like_bad)
}

/// Posterior `Pr(G | σ)` of a sophisticated consumer, by Bayes' rule over
/// the signal-specific conditionals `Pr(σ | Q)`.
pub fn posterior_sophisticated(params: &ModelParams, signal: Signal) -> f64 {
    let good = signal_distribution(params, Quality::Good).prob(signal);
    let bad = signal_distribution(params, Quality::Bad).prob(signal);
    bayes(params.mu0, good, bad)
}

/// Posterior `Pr(G | σ_q)` of a naive consumer, who conditions on valence only.
pub fn posterior_naive(params: &ModelParams, valence: Valence) -> f64 {
    let good = signal_distribution(params, Quality::Good).valence_prob(valence);
    let bad = signal_distribution(params, Quality::Bad).valence_prob(valence);
    bayes(params.mu0, good, bad)
}

/// Posterior under a general prior, written with the valence likelihood
/// `L = Pr(q | G; ·)` and the symmetric bad-quality likelihood `1 − L`:
///
/// `Pr(G | σ) = mu0·L / (mu0·L + (1 − mu0)·(1 − L))`.
pub fn posterior_with_prior(params: &ModelParams, consumer: ConsumerType, signal: Signal) -> f64 {
    let like = match consumer {
        ConsumerType::Sophisticated => valence_likelihood(params, signal, Quality::Good),
        ConsumerType::Naive => naive_likelihood(params, signal.valence, Quality::Good),
    };
    bayes(params.mu0, like, 1.0 - like)
}

/// Posterior `Pr(G | ·)` for every consumer type and signal.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BeliefProfile {
    sophisticated: [f64; 4],
    naive: [f64; 4],
}

impl BeliefProfile {
    pub fn new(params: &ModelParams) -> Self {
        let mut sophisticated = [0.0; 4];
        let mut naive = [0.0; 4];
        for s in Signal::ALL {
            sophisticated[s.index()] = posterior_with_prior(params, ConsumerType::Sophisticated, s);
            naive[s.index()] = posterior_with_prior(params, ConsumerType::Naive, s);
        }
        BeliefProfile { sophisticated, naive }
    }

    pub fn posterior(&self, consumer: ConsumerType, signal: Signal) -> f64 {
        match consumer {
            ConsumerType::Sophisticated => self.sophisticated[signal.index()],
            ConsumerType::Naive => self.naive[signal.index()],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn base(h: f64) -> ModelParams {
        ModelParams::new(h, 0.5, 0.1).unwrap()
    }

    #[test]
    fn rejects_out_of_domain_parameters() {
        assert!(ModelParams::new(0.49, 0.5, 0.1).is_err());
        assert!(ModelParams::new(1.01, 0.5, 0.1).is_err());
        assert!(ModelParams::new(0.8, -0.1, 0.1).is_err());
        assert!(ModelParams::new(0.8, 0.5, 1.0).is_err());
        assert!(base(0.8).with_gamma(0.0).is_err());
        assert!(base(0.8).with_gamma(1.0).is_err());
        assert!(base(0.8).with_mu0(1.2).is_err());
        assert!(ModelParams::from_parts(0.8, 0.6, 0.5, 0.1, 1.0, 0.5, 0.5).is_err());
        assert!(ModelParams::from_parts(0.8, 0.5, 0.5, 0.1, 0.9, 0.5, 0.5).is_err());
        assert!(ModelParams::new(f64::NAN, 0.5, 0.1).is_err());
    }

    #[test]
    fn json_round_trip_validates() {
        let p = base(0.8).with_mu0(0.7).unwrap();
        let text = serde_json::to_string(&p).unwrap();
        assert!(text.contains("\"v_B\":0.1"));
        let back: ModelParams = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);

        let defaulted: ModelParams = serde_json::from_str(r#"{"h":0.7,"lambda":1,"v_B":0.1}"#).unwrap();
        assert!(defaulted.is_base());
        assert!(serde_json::from_str::<ModelParams>(r#"{"h":0.3,"lambda":1,"v_B":0.1}"#).is_err());
    }

    #[test]
    fn signal_distribution_examples() {
        let d = signal_distribution(&base(0.8), Quality::Good);
        assert_abs_diff_eq!(d.prob(Signal::GOOD_HIGH), 0.40, epsilon = 1e-12);
        assert_abs_diff_eq!(d.prob(Signal::BAD_HIGH), 0.10, epsilon = 1e-12);
        assert_abs_diff_eq!(d.prob(Signal::GOOD_LOW), 0.25, epsilon = 1e-12);
        assert_abs_diff_eq!(d.prob(Signal::BAD_LOW), 0.25, epsilon = 1e-12);

        let flat = signal_distribution(&base(0.5), Quality::Good);
        for (_, p) in flat.iter() {
            assert_eq!(p, 0.25);
        }

        let perfect = signal_distribution(&base(1.0), Quality::Bad);
        assert_eq!(perfect.prob(Signal::BAD_HIGH), 0.5);
        assert_eq!(perfect.prob(Signal::GOOD_HIGH), 0.0);
    }

    #[test]
    fn sophisticated_posteriors_match_table() {
        let p = base(0.8);
        assert_abs_diff_eq!(posterior_sophisticated(&p, Signal::GOOD_HIGH), 0.8, epsilon = 1e-12);
        assert_abs_diff_eq!(posterior_sophisticated(&p, Signal::BAD_HIGH), 0.2, epsilon = 1e-12);
        assert_abs_diff_eq!(posterior_sophisticated(&p, Signal::BAD_LOW), 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(posterior_sophisticated(&p, Signal::GOOD_LOW), 0.5, epsilon = 1e-12);
        for s in Signal::ALL {
            assert_abs_diff_eq!(posterior_sophisticated(&base(0.5), s), 0.5, epsilon = 1e-12);
        }
    }

    #[test]
    fn naive_posteriors_match_tables() {
        assert_abs_diff_eq!(posterior_naive(&base(0.8), Valence::Good), 0.65, epsilon = 1e-12);
        assert_abs_diff_eq!(posterior_naive(&base(0.9), Valence::Bad), 0.30, epsilon = 1e-12);
        let p = base(0.9).with_gamma(0.8).unwrap();
        assert_abs_diff_eq!(posterior_naive(&p, Valence::Good), 0.82, epsilon = 1e-12);
        assert_abs_diff_eq!(posterior_naive(&p, Valence::Bad), 0.18, epsilon = 1e-12);
    }

    #[test]
    fn general_prior_examples() {
        let p = base(0.8);
        assert_abs_diff_eq!(
            posterior_with_prior(&p, ConsumerType::Naive, Signal::GOOD_HIGH),
            0.65,
            epsilon = 1e-12
        );
        let zero = p.with_mu0(0.0).unwrap();
        for s in Signal::ALL {
            assert_eq!(posterior_with_prior(&zero, ConsumerType::Naive, s), 0.0);
            assert_eq!(posterior_with_prior(&zero, ConsumerType::Sophisticated, s), 0.0);
        }
        let perfect_zero = base(1.0).with_mu0(0.0).unwrap();
        assert_eq!(posterior_sophisticated(&perfect_zero, Signal::GOOD_HIGH), 0.0);

        let p7 = p.with_mu0(0.7).unwrap();
        let by_hand = 0.7 * 0.65 / (0.7 * 0.65 + 0.3 * 0.35);
        assert_abs_diff_eq!(by_hand, 0.8125, epsilon = 1e-12);
        assert_abs_diff_eq!(
            posterior_with_prior(&p7, ConsumerType::Naive, Signal::GOOD_LOW),
            by_hand,
            epsilon = 1e-12
        );
    }

    #[test]
    fn low_precision_signals_preserve_prior() {
        for mu0 in [0.0, 0.2, 0.5, 0.9, 1.0] {
            let p = base(0.85).with_mu0(mu0).unwrap();
            assert_abs_diff_eq!(posterior_sophisticated(&p, Signal::GOOD_LOW), mu0, epsilon = 1e-12);
            assert_abs_diff_eq!(
                posterior_with_prior(&p, ConsumerType::Sophisticated, Signal::BAD_LOW),
                mu0,
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn symmetric_prior_reduces_exactly() {
        // The general-prior formula must reproduce the likelihood bit for bit
        // at mu0 = 0.5; the demand schedules rely on it.
        for h in [0.5, 0.55, 0.7, 0.8123, 0.9, 1.0] {
            let p = base(h);
            let wbar = average_precision(&p);
            assert_eq!(posterior_with_prior(&p, ConsumerType::Naive, Signal::GOOD_HIGH), wbar);
            assert_eq!(
                posterior_with_prior(&p, ConsumerType::Naive, Signal::BAD_LOW),
                1.0 - wbar
            );
            assert_eq!(
                posterior_with_prior(&p, ConsumerType::Sophisticated, Signal::GOOD_HIGH),
                h
            );
            assert_eq!(
                posterior_with_prior(&p, ConsumerType::Sophisticated, Signal::BAD_HIGH),
                1.0 - h
            );
        }
    }

    #[test]
    fn belief_profile_naive_ignores_precision() {
        let b = BeliefProfile::new(&base(0.77).with_mu0(0.3).unwrap());
        assert_eq!(
            b.posterior(ConsumerType::Naive, Signal::GOOD_HIGH),
            b.posterior(ConsumerType::Naive, Signal::GOOD_LOW)
        );
        assert_eq!(
            b.posterior(ConsumerType::Naive, Signal::BAD_HIGH),
            b.posterior(ConsumerType::Naive, Signal::BAD_LOW)
        );
    }
}
