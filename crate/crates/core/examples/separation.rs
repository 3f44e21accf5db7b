//! Why the low-quality firm never lets itself be singled out.

use splab::oracle::check_no_separation;
use splab::ModelParams;

fn main() -> splab::Result<()> {
    let params = ModelParams::new(0.8, 0.5, 0.1)?;
    let r = check_no_separation(&params);
    println!(
        "checked {} prices above v_B; lowest mimicry payoff {:.6} at p = {:.6}; holds = {}",
        r.prices_checked, r.min_mimicry_payoff, r.min_at, r.holds
    );
    for w in &r.witnesses {
        println!(
            "  p_G {:.4}: mimicking earns {:.4}, {:.4} above v_B",
            w.p_g, w.mimicry_payoff, w.margin
        );
    }
    Ok(())
}
