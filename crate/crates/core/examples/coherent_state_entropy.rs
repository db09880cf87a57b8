//! Atom entropy for a coherent field with two-photon coupling.
//!
//! Prints a coarse S_a trace and the local minima, which sit at the
//! revivals (multiples of lambda t = pi for k = 2).

use jc_entropy::sweep::{run_scenario, RunOptions, Scenario, TimeGrid};

fn main() -> jc_entropy::Result<()> {
    let scenario = Scenario::preset("fig1a").unwrap().with_grid(TimeGrid { start: 0.0, end: 4.0, count: 1601 });
    let rows = run_scenario(&scenario, RunOptions::default())?;

    println!("{:>8} {:>10} {:>10}", "lt/pi", "S_a", "rho_ee");
    for row in rows.iter().step_by(100) {
        println!("{:8.3} {:10.6} {:10.6}", row.sample.scaled_t, row.sample.s_a, row.rho_ee);
    }

    println!("\nlocal minima of S_a:");
    for w in rows.windows(3) {
        let (a, b, c) = (w[0].sample.s_a, w[1].sample.s_a, w[2].sample.s_a);
        if b < a && b < c && b < 0.05 {
            println!("  lt/pi = {:.4}  S_a = {:.2e}", w[1].sample.scaled_t, b);
        }
    }
    Ok(())
}
