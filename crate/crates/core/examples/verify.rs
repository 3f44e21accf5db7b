//! Grid, Monte-Carlo and no-separation checks over a small grid.

use splab::sweep::{run, Axis, Mode, SweepSpec};

fn main() -> splab::Result<()> {
    let spec = SweepSpec {
        h: Axis::range(0.55, 1.0, 4),
        lambda: Axis::range(0.0, 1.0, 3),
        v_b: Axis::Fixed(0.05),
        mode: Mode::Verify,
        draws: 200_000,
        seed: 11,
        ..SweepSpec::default()
    };
    let report = run(&spec)?;
    print!("{}", report.table.to_csv_string());
    println!("{} of {} points failed", report.failures, report.table.rows.len());
    Ok(())
}
