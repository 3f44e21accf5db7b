//! The mixed-strategy equilibrium of a naive market at full precision.

use splab::equilibrium::{indifference_residual, mixed_beliefs, mixing_band};
use splab::{solve_mixed, solve_pooling, ModelParams};

fn main() -> splab::Result<()> {
    let (lo, hi) = mixing_band(1.0);
    println!("mixing band at h = 1: ({lo}, {hi})");
    for v in [0.19, 0.21, 0.22, 0.24, 0.26] {
        let params = ModelParams::new(1.0, 0.0, v)?;
        let pooled = solve_pooling(&params)?;
        let mixed = solve_mixed(&params)?;
        print!("v_B = {v}: pooling {:?}, mixed {:?}", pooled.kind, mixed.kind);
        if let Some(alpha) = mixed.alpha {
            let b = mixed_beliefs(&params, alpha);
            print!(
                "  p̄ {:.4}  α {:.4}  profit_G {:.4}  Pr(G|p̄) {:.4}  residual {:.1e}",
                mixed.price.unwrap(),
                alpha,
                mixed.profit_g.unwrap(),
                b.price_posterior,
                indifference_residual(&params, &mixed).unwrap(),
            );
        }
        println!();
    }
    Ok(())
}
