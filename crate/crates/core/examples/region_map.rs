//! Character map of the (h, lambda) plane: one letter per equilibrium region.

use splab::equilibrium::Classification;
use splab::sweep::{run_sweep, Axis, Format, Mode, SweepSpec};

fn main() -> splab::Result<()> {
    let spec = SweepSpec {
        h: Axis::range(0.5, 1.0, 51),
        lambda: Axis::range(0.0, 1.0, 21),
        v_b: Axis::Fixed(0.1),
        mode: Mode::Regions,
        format: Format::Csv,
        ..SweepSpec::default()
    };
    let cells = run_sweep(&spec)?;
    // Rows run from lambda = 1 at the top down to lambda = 0.
    for row in cells.chunks(51).rev() {
        let line: String = row
            .iter()
            .map(|c| match c.classification {
                Classification::R1 => '1',
                Classification::R2 => '2',
                Classification::R3 => '3',
                Classification::R4 => '4',
                Classification::L5 => '5',
                Classification::Mixed => 'm',
                Classification::None => '.',
            })
            .collect();
        println!("λ={:.2} {line}", row[0].lambda);
    }
    println!("        h: 0.5 → 1");
    Ok(())
}
