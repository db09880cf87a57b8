//! A 50/50 mixture of |alpha> and |-alpha>.
//!
//! The joint state is mixed, so the two partial entropies separate:
//! S_f starts at ln 2 and stays above S_a.

use jc_entropy::sweep::{run_scenario, RunOptions, Scenario, TimeGrid};

fn main() -> jc_entropy::Result<()> {
    let s = Scenario::preset("fig1c").unwrap().with_grid(TimeGrid { start: 0.0, end: 4.0, count: 401 });
    let rows = run_scenario(&s, RunOptions::default())?;

    println!("ln 2 = {:.6}", std::f64::consts::LN_2);
    println!("{:>8} {:>10} {:>10} {:>10}", "lt/pi", "S_a", "S_f", "S_f-S_a");
    for row in rows.iter().step_by(25) {
        let e = &row.sample;
        println!("{:8.3} {:10.6} {:10.6} {:10.6}", e.scaled_t, e.s_a, e.s_f, e.s_f - e.s_a);
    }
    let gap = rows.iter().map(|r| r.sample.s_f - r.sample.s_a).fold(f64::INFINITY, f64::min);
    println!("\nsmallest S_f - S_a over the grid: {gap:.6}");
    Ok(())
}
