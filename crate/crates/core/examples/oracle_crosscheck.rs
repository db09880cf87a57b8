//! Closed-form entropies against brute-force propagation of the
//! truncated Hamiltonian.

use jc_entropy::oracle::oracle_entropies;
use jc_entropy::sweep::{run_scenario, RunOptions, Scenario, TimeGrid};

fn main() -> jc_entropy::Result<()> {
    let grid = TimeGrid { start: 0.0, end: 4.0, count: 41 };
    for name in ["fig1a", "fig2b", "fig3c"] {
        let s = Scenario::preset(name).unwrap().with_grid(grid);
        let rows = run_scenario(&s, RunOptions::default())?;
        let oracle = oracle_entropies(&s.params, s.prep, &grid.points())?;
        let worst = rows
            .iter()
            .zip(&oracle)
            .map(|(r, o)| (r.sample.s_a - o.s_a).abs().max((r.sample.s_f - o.s_f).abs()))
            .fold(0.0, f64::max);
        println!("{name}: max |closed - oracle| = {worst:.2e}");
    }
    Ok(())
}
