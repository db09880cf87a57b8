//! Effect of the Stark-shift ratio R on the atom entropy.
//!
//! For each R the time-averaged S_a and the depth of the first revival
//! are reported.

use jc_entropy::dressed::ModelParams;
use jc_entropy::sweep::{run_scenario, RunOptions, Scenario, TimeGrid};

fn main() -> jc_entropy::Result<()> {
    println!("{:>6} {:>12} {:>14}", "R", "mean S_a", "min S_a [0.8,1.2]");
    for r in [0.0, 0.1, 0.3, 0.5, 1.0, 2.0] {
        let mut s = Scenario::preset("fig1a").unwrap().with_grid(TimeGrid { start: 0.0, end: 4.0, count: 801 });
        s.params = ModelParams::new(1.0, 0.0, 2, r)?;
        let rows = run_scenario(&s, RunOptions::default())?;
        let mean = rows.iter().map(|r| r.sample.s_a).sum::<f64>() / rows.len() as f64;
        let revival = rows
            .iter()
            .filter(|r| (0.8..=1.2).contains(&r.sample.scaled_t))
            .map(|r| r.sample.s_a)
            .fold(f64::INFINITY, f64::min);
        println!("{r:6.2} {mean:12.6} {revival:14.6}");
    }
    Ok(())
}
