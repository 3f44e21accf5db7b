//! Which market each firm type would rather face.

use splab::equilibrium::compare_at;

fn main() -> splab::Result<()> {
    for i in 0..=10 {
        let h = 0.5 + i as f64 / 20.0;
        let c = compare_at(h, 0.1)?;
        println!(
            "h {h:.2}  G prefers {:<13} B prefers {:<13} gap_G {:+.4}  gap_B {:+.4}",
            c.preferred_by_g.map_or("-", |p| p.as_str()),
            c.preferred_by_b.map_or("-", |p| p.as_str()),
            c.gap_g.unwrap_or(f64::NAN),
            c.gap_b.unwrap_or(f64::NAN),
        );
    }
    Ok(())
}
