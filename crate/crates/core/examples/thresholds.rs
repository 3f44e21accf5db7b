//! Every comparative-statics threshold at one point, next to its closed form.

use splab::equilibrium::thresholds::{
    h_overline_closed_form, h_star_naive_closed_form, h_star_sophisticated_closed_form, h_underline_closed_form,
    v_bar_closed_form,
};
use splab::{thresholds, ModelParams};

fn main() -> splab::Result<()> {
    let v = 0.1;
    let t = thresholds(&ModelParams::new(0.8, 0.5, v)?)?;
    println!("{}", serde_json::to_string_pretty(&t).expect("plain data"));

    let rows = [
        ("h*(1)", t.h_star_sophisticated, h_star_sophisticated_closed_form(v)),
        ("h*(0)", t.h_star_naive, h_star_naive_closed_form(v)),
        ("h_underline", t.h_underline, h_underline_closed_form(v)),
        ("h_overline", t.h_overline, h_overline_closed_form(v)),
        ("v_bar", Some(t.v_bar), v_bar_closed_form()),
    ];
    for (name, bisected, closed) in rows {
        let b = bisected.unwrap_or(f64::NAN);
        println!(
            "{name:<12} bisection {b:.10}  closed form {closed:.10}  diff {:.1e}",
            (b - closed).abs()
        );
    }
    Ok(())
}
