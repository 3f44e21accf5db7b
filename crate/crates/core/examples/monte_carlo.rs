//! Simulated demand against the analytic schedule.

use splab::oracle::simulate_market;
use splab::{build_wtp_schedule, expected_demand, ModelParams, Quality};

fn main() -> splab::Result<()> {
    let params = ModelParams::new(0.8, 0.4, 0.1)?;
    let schedule = build_wtp_schedule(&params)?;
    for price in [0.3, 0.5, 0.6, 0.75] {
        for q in Quality::ALL {
            let r = simulate_market(&params, q, price, 1_000_000, 7);
            let exact = expected_demand(&schedule, price, q)?;
            println!(
                "p {price:.2} {q}  simulated {:.5} ± {:.5}  exact {exact:.5}  z {:+.2}",
                r.est_demand,
                r.se_demand,
                (r.est_demand - exact) / r.se_demand
            );
        }
    }
    Ok(())
}
