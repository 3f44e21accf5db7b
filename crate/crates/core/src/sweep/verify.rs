//! Per-point oracle checks behind the `verify` mode.

use serde::Serialize;

use crate::demand::{expected_demand, market_schedule};
use crate::equilibrium::pooling::best_candidate;
use crate::equilibrium::{solve, EquilibriumKind};
use crate::error::Result;
use crate::model::{ModelParams, Quality};
use crate::oracle::{check_no_separation_on, grid_argmax, simulate_market, GridSpec};
use crate::sweep::format::{Table, Value};
use crate::sweep::SweepSpec;

/// Monte-Carlo estimates must land within this many standard errors.
pub const MC_SIGMAS: f64 = 4.0;

/// Outcome of every oracle check at one grid point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyRow {
    pub h: f64,
    pub lambda: f64,
    pub gamma: f64,
    pub mu0: f64,
    #[serde(rename = "v_B")]
    pub v_b: f64,
    pub kind: EquilibriumKind,
    /// Price maximizing the high-quality profit over the candidate set.
    pub candidate_price: f64,
    /// Same maximization over the dense grid with oracle demand.
    pub grid_price: f64,
    pub grid_match: bool,
    pub mc_demand_g: f64,
    pub demand_g: f64,
    pub mc_demand_b: f64,
    pub demand_b: f64,
    pub mc_ok: bool,
    pub separation_ok: bool,
    /// Every equilibrium price lies in `[v_B, 1]`.
    pub bounds_ok: bool,
    pub pass: bool,
}

fn within(est: f64, exact: f64, se: f64) -> bool {
    let tol = if se > 0.0 { MC_SIGMAS * se } else { 1e-12 };
    (est - exact).abs() <= tol
}

/// Runs the grid, Monte-Carlo, separation and price-bound checks at
/// `params`. `index` offsets the seed so that points draw independently.
pub fn verify_point(params: &ModelParams, spec: &SweepSpec, index: u64) -> Result<VerifyRow> {
    let outcome = solve(params)?;
    let schedule = market_schedule(params);
    let cand = best_candidate(&schedule);
    let grid = GridSpec::for_params_with_points(params, spec.grid_points);
    let opt = grid_argmax(params, Quality::Good, &grid);

    let seed = spec.seed.wrapping_add(2 * index);
    let sim_g = simulate_market(params, Quality::Good, cand.price, spec.draws, seed);
    let sim_b = simulate_market(params, Quality::Bad, cand.price, spec.draws, seed.wrapping_add(1));
    let demand_g = expected_demand(&schedule, cand.price, Quality::Good)?;
    let demand_b = expected_demand(&schedule, cand.price, Quality::Bad)?;
    let mc_ok =
        within(sim_g.est_demand, demand_g, sim_g.se_demand) && within(sim_b.est_demand, demand_b, sim_b.se_demand);

    let separation_ok = check_no_separation_on(params, &grid).holds;
    let v_b = params.v_b();
    let bounds_ok = [outcome.price, outcome.low_price]
        .into_iter()
        .flatten()
        .all(|p| (v_b..=1.0).contains(&p));
    let grid_match = opt.price == cand.price;

    Ok(VerifyRow {
        h: params.h(),
        lambda: params.lambda(),
        gamma: params.gamma(),
        mu0: params.mu0(),
        v_b,
        kind: outcome.kind,
        candidate_price: cand.price,
        grid_price: opt.price,
        grid_match,
        mc_demand_g: sim_g.est_demand,
        demand_g,
        mc_demand_b: sim_b.est_demand,
        demand_b,
        mc_ok,
        separation_ok,
        bounds_ok,
        pass: grid_match && mc_ok && separation_ok && bounds_ok,
    })
}

impl VerifyRow {
    pub fn table(rows: &[VerifyRow]) -> Table {
        let mut t = Table::new(vec![
            "h",
            "lambda",
            "gamma",
            "mu0",
            "v_B",
            "kind",
            "candidate_price",
            "grid_price",
            "grid_match",
            "mc_demand_G",
            "demand_G",
            "mc_demand_B",
            "demand_B",
            "mc_ok",
            "separation_ok",
            "bounds_ok",
            "pass",
        ]);
        for r in rows {
            let mut row: Vec<Value> = [r.h, r.lambda, r.gamma, r.mu0, r.v_b].map(Value::Num).to_vec();
            row.push(Value::text(format!("{:?}", r.kind).to_lowercase()));
            row.extend([r.candidate_price, r.grid_price].map(Value::Num));
            row.push(Value::Bool(r.grid_match));
            row.extend([r.mc_demand_g, r.demand_g, r.mc_demand_b, r.demand_b].map(Value::Num));
            row.extend([r.mc_ok, r.separation_ok, r.bounds_ok, r.pass].map(Value::Bool));
            t.push(row);
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passes_at_a_pooling_point() {
        let spec = SweepSpec {
            draws: 20_000,
            grid_points: 2001,
            ..SweepSpec::default()
        };
        let p = ModelParams::new(0.8, 0.3, 0.1).unwrap();
        let r = verify_point(&p, &spec, 0).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.kind, EquilibriumKind::Pooling);
    }

    #[test]
    fn covers_mixed_and_extension_points() {
        let spec = SweepSpec {
            draws: 20_000,
            grid_points: 2001,
            ..SweepSpec::default()
        };
        for p in [
            ModelParams::new(1.0, 0.0, 0.22).unwrap(),
            ModelParams::new(0.7, 0.0, 0.0).unwrap().with_gamma(0.3).unwrap(),
            ModelParams::new(0.8, 0.0, 0.05).unwrap().with_mu0(0.7).unwrap(),
        ] {
            assert!(verify_point(&p, &spec, 3).unwrap().pass);
        }
    }
}
