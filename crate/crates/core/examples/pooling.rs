//! Pooling equilibria across precision in a sophisticated market.

use splab::{solve_pooling, ModelParams};

fn main() -> splab::Result<()> {
    for h in [0.55, 0.6, 0.65, 0.7, 0.8, 0.9, 1.0] {
        let eq = solve_pooling(&ModelParams::new(h, 1.0, 0.1)?)?;
        println!(
            "h = {h:<4}  {:<5} price {:.4}  profit_G {:.4}  profit_B {:.4}",
            eq.classification().as_str(),
            eq.price.unwrap_or(f64::NAN),
            eq.profit_g.unwrap_or(f64::NAN),
            eq.profit_b.unwrap_or(f64::NAN),
        );
    }
    Ok(())
}
