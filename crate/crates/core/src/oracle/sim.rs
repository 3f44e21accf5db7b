//! Monte-Carlo market simulation.
//!
//! Draws are split into fixed batches. Batch `b` uses a ChaCha8 generator
//! seeded with the user seed on stream `b`, so the result depends only on
//! the seed and the draw count, never on how batches are scheduled.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::model::{ModelParams, Quality};
use crate::oracle::cells::{buys, cells};

pub const BATCH_SIZE: u64 = 65_536;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SimReport {
    pub draws: u64,
    pub seed: u64,
    pub quality: Quality,
    pub price: f64,
    pub est_demand: f64,
    pub se_demand: f64,
    pub est_profit: f64,
    pub se_profit: f64,
}

/// Simulates `draws` consumers: type, then precision, then valence, then
/// the buy decision of that type at that signal.
pub fn simulate_market(params: &ModelParams, quality: Quality, price: f64, draws: u64, seed: u64) -> SimReport {
    let draws = draws.max(1);
    // Cells are ordered by (sophisticated, good valence, high precision).
    let table = cells(params);
    let buy: Vec<bool> = table.iter().map(|c| buys(c.wtp, price)).collect();
    let good = quality == Quality::Good;
    let batches = draws.div_ceil(BATCH_SIZE);

    let bought: u64 = (0..batches)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b);
            let n = BATCH_SIZE.min(draws - b * BATCH_SIZE);
            let mut count = 0u64;
            for _ in 0..n {
                let sophisticated = rng.gen::<f64>() < params.lambda();
                let high = rng.gen::<f64>() < params.gamma();
                let w = if high { params.h() } else { params.l() };
                let correct = rng.gen::<f64>() < w;
                let good_valence = correct == good;
                let idx = usize::from(!sophisticated) * 4 + usize::from(!good_valence) * 2 + usize::from(!high);
                count += u64::from(buy[idx]);
            }
            count
        })
        .sum();

    let n = draws as f64;
    let mean = bought as f64 / n;
    let var = if draws > 1 {
        mean * (1.0 - mean) * n / (n - 1.0)
    } else {
        0.0
    };
    let se = (var / n).sqrt();
    SimReport {
        draws,
        seed,
        quality,
        price,
        est_demand: mean,
        se_demand: se,
        est_profit: price * mean,
        se_profit: price * se,
    }
}
