use serde::Serialize;

use crate::demand::{candidate_prices, market_schedule};
use crate::model::{ModelParams, Quality};
use crate::oracle::cells::{oracle_demand, TIE_TOL};

pub const DEFAULT_GRID_POINTS: usize = 100_001;

/// Uniform price mesh plus injected prices that must appear exactly.
///
/// Mesh points within [`TIE_TOL`] of an injected price are dropped so that
/// a rounded neighbour never shadows the exact value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridSpec {
    pub price_min: f64,
    pub price_max: f64,
    pub points: usize,
    pub injected: Vec<f64>,
}

impl GridSpec {
    pub fn uniform(price_min: f64, price_max: f64, points: usize) -> Self {
        GridSpec {
            price_min,
            price_max,
            points: points.max(2),
            injected: Vec::new(),
        }
    }

    /// Default mesh on `[0, 1]` with the five WTP levels and `v_B` injected.
    pub fn for_params(params: &ModelParams) -> Self {
        Self::for_params_with_points(params, DEFAULT_GRID_POINTS)
    }

    pub fn for_params_with_points(params: &ModelParams, points: usize) -> Self {
        let mut g = Self::uniform(0.0, 1.0, points);
        g.injected = candidate_prices(&market_schedule(params)).to_vec();
        g
    }

    /// Ascending grid prices.
    pub fn prices(&self) -> Vec<f64> {
        let n = self.points;
        let span = self.price_max - self.price_min;
        let injected: Vec<f64> = self
            .injected
            .iter()
            .copied()
            .filter(|p| (self.price_min..=self.price_max).contains(p))
            .collect();
        let mut out: Vec<f64> = (0..n)
            .map(|i| self.price_min + span * i as f64 / (n - 1) as f64)
            .filter(|m| injected.iter().all(|c| (m - c).abs() > TIE_TOL))
            .collect();
        out.extend(injected);
        out.sort_by(f64::total_cmp);
        out.dedup();
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridOptimum {
    pub price: f64,
    pub profit: f64,
}

/// Maximizes `p · demand(p)` over the grid, with demand from the oracle's
/// own eight-cell summation. Exact ties go to the lower price.
pub fn grid_argmax(params: &ModelParams, quality: Quality, grid: &GridSpec) -> GridOptimum {
    let mut best = GridOptimum {
        price: f64::NAN,
        profit: f64::NEG_INFINITY,
    };
    for p in grid.prices() {
        let profit = p * oracle_demand(params, quality, p);
        if profit > best.profit {
            best = GridOptimum { price: p, profit };
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equilibrium::solve_pooling;

    #[test]
    fn candidates_are_exact_members() {
        let p = ModelParams::new(0.8123, 0.31, 0.07).unwrap();
        let g = GridSpec::for_params(&p);
        let prices = g.prices();
        for c in &g.injected {
            assert!(prices.binary_search_by(|x| x.total_cmp(c)).is_ok());
        }
        assert!(prices.windows(2).all(|w| w[0] < w[1]));
        assert!(prices.len() <= DEFAULT_GRID_POINTS + 6);
    }

    #[test]
    fn agrees_with_solver_in_sophisticated_market() {
        let p = ModelParams::new(0.7, 1.0, 0.1).unwrap();
        let o = grid_argmax(&p, Quality::Good, &GridSpec::for_params(&p));
        assert_eq!(o.price, solve_pooling(&p).unwrap().price.unwrap());
    }

    #[test]
    fn uninformative_precision() {
        let p = ModelParams::new(0.5, 0.3, 0.1).unwrap();
        let o = grid_argmax(&p, Quality::Good, &GridSpec::for_params_with_points(&p, 1001));
        assert!((o.price - 0.55).abs() < 1e-15);
    }

    #[test]
    fn maximizer_is_never_interior() {
        let p = ModelParams::new(0.8, 0.5, 0.1).unwrap();
        let g = GridSpec::for_params(&p);
        let o = grid_argmax(&p, Quality::Good, &g);
        assert!(g.injected[..5].contains(&o.price));
    }
}
