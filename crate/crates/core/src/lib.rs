//! Equilibria of a monopoly quality-signaling game with sophisticated and
//! naive consumers.
//!
//! A firm knows whether its product is good or bad and sets a price.
//! Consumers see the price and one private third-party signal. Sophisticated
//! consumers know how precise their signal is; naive consumers only see
//! whether it is good or bad. The crate computes posterior beliefs, the
//! resulting step demand, pooling and mixed-strategy equilibria and the
//! precision and market-composition thresholds at which the firm's pricing
//! strategy switches. An independent oracle layer (grid search, Monte-Carlo
//! simulation, bisection) cross-checks every closed form.
//!
//! ```
//! use splab::{solve_pooling, ModelParams, Region};
//!
//! let params = ModelParams::new(0.7, 1.0, 0.1)?;
//! let eq = solve_pooling(&params)?;
//! assert_eq!(eq.region, Some(Region::R3));
//! assert!((eq.price.unwrap() - 0.55).abs() < 1e-12);
//! # Ok::<(), splab::Error>(())
//! ```

pub mod demand;
pub mod equilibrium;
pub mod error;
pub mod model;
pub mod oracle;
pub mod sweep;

pub use demand::{
    build_wtp_schedule, candidate_prices, expected_demand, market_schedule, piecewise_profit, ConsumerLabel,
    PiecewiseProfit, WtpLevel, WtpSchedule,
};
pub use equilibrium::{
    compare_markets, solve, solve_gamma, solve_mixed, solve_pooling, solve_prior, thresholds, Classification,
    EquilibriumKind, EquilibriumOutcome, Region, ThresholdSet,
};
pub use error::{Error, Result};
pub use model::{
    posterior_naive, posterior_sophisticated, posterior_with_prior, signal_distribution, BeliefProfile, ConsumerType,
    ModelParams, Precision, Quality, Signal, Valence,
};
