//! The five WTP levels, their masses and the piecewise profit they imply.

use splab::{build_wtp_schedule, expected_demand, piecewise_profit, ModelParams, Quality};

fn main() -> splab::Result<()> {
    let params = ModelParams::new(0.8, 1.0, 0.1)?;
    let schedule = build_wtp_schedule(&params)?;
    println!("{:<20} {:>8} {:>8} {:>8}", "segment", "wtp", "mass_G", "mass_B");
    for l in schedule.levels() {
        println!(
            "{:<20} {:>8.4} {:>8.4} {:>8.4}",
            l.label.as_str(),
            l.wtp,
            l.mass_g,
            l.mass_b
        );
    }

    let price = 0.55;
    for q in Quality::ALL {
        let d = expected_demand(&schedule, price, q)?;
        println!("demand of {q} at {price}: {d:.4}");
    }

    let profit = piecewise_profit(&params, Quality::Good)?;
    for piece in profit.effective_pieces() {
        println!(
            "  ({:.4}, {:.4}]  profit = {:.4}·p",
            piece.lower, piece.upper, piece.multiplier
        );
    }
    println!("{}", serde_json::to_string_pretty(&schedule).expect("plain data"));
    Ok(())
}
