//! Naive market with a prior other than one half.

use splab::equilibrium::{h_star_prior, prior_thresholds};
use splab::{solve_prior, ModelParams};

fn main() -> splab::Result<()> {
    let v = 0.05;
    for mu0 in [0.6, 0.7, 0.8] {
        let hs = h_star_prior(mu0, v)?;
        println!("mu0 = {mu0}: switch at h = {hs:?}");
        for i in 0..=10 {
            let h = 0.5 + i as f64 / 20.0;
            let eq = solve_prior(&ModelParams::new(h, 0.0, v)?.with_mu0(mu0)?)?;
            println!(
                "  h {h:.2}  {:<4} profit_G {:?}",
                eq.classification().as_str(),
                eq.profit_g
            );
        }
    }
    let t = prior_thresholds(&ModelParams::new(0.8, 0.0, v)?.with_mu0(0.7)?)?;
    println!("{}", serde_json::to_string_pretty(&t).expect("plain data"));
    Ok(())
}
