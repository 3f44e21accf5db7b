//! Profit curves of both markets as CSV, plus where the G curves cross.

use splab::sweep::{emit_profit_curves, Axis, SweepSpec, Value};

fn main() -> splab::Result<()> {
    let spec = SweepSpec {
        h: Axis::range(0.5, 1.0, 501),
        v_b: Axis::Fixed(0.1),
        ..SweepSpec::default()
    };
    let table = emit_profit_curves(&spec)?;
    let num = |v: &Value| match v {
        Value::Num(x) => *x,
        _ => f64::NAN,
    };
    let gap: Vec<(f64, f64)> = table
        .rows
        .iter()
        .map(|r| (num(&r[0]), num(&r[1]) - num(&r[2])))
        .collect();
    for w in gap.windows(2) {
        if w[0].1 * w[1].1 < 0.0 || (w[0].1 == 0.0 && w[1].1 != 0.0 && w[0].0 > 0.5) {
            println!("G curves cross in [{}, {}]", w[0].0, w[1].0);
        }
    }
    print!("{}", &table.to_csv_string()[..400]);
    println!("...");
    Ok(())
}
