//! Naive market where high precision occurs with probability gamma.

use splab::equilibrium::{gamma_hat, gamma_thresholds};
use splab::{solve_gamma, ModelParams};

fn main() -> splab::Result<()> {
    let t = gamma_thresholds()?;
    println!("h_underline {:.10}  h_overline {:.10}", t.h_underline, t.h_overline);
    for h in [0.55, 0.68, 0.9] {
        println!("h = {h}  gamma_hat = {:?}", gamma_hat(h)?);
        for i in 1..=9 {
            let gamma = i as f64 / 10.0;
            let eq = solve_gamma(&ModelParams::new(h, 0.0, 0.0)?.with_gamma(gamma)?)?;
            println!(
                "  gamma {gamma:.1}  {:<3} profit_G {:.4}  profit_B {:.4}",
                eq.classification().as_str(),
                eq.profit_g.unwrap(),
                eq.profit_b.unwrap()
            );
        }
    }
    Ok(())
}
