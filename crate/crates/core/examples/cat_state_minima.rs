//! Even and odd cat states against the plain coherent state.
//!
//! For an even cat only even photon numbers are occupied, so the Rabi
//! phases realign twice as often and an extra disentanglement dip shows up
//! near lambda t = pi / 2.

use jc_entropy::fock::FieldPrep;
use jc_entropy::sweep::{run_scenario, RunOptions, Scenario, TimeGrid};

fn dip(prep: FieldPrep) -> jc_entropy::Result<(f64, f64)> {
    let mut s = Scenario::preset("fig1a").unwrap().with_grid(TimeGrid { start: 0.4, end: 0.6, count: 801 });
    s.prep = prep;
    let rows = run_scenario(&s, RunOptions::default())?;
    let best = rows.iter().min_by(|a, b| a.sample.s_a.total_cmp(&b.sample.s_a)).unwrap();
    Ok((best.sample.scaled_t, best.sample.s_a))
}

fn main() -> jc_entropy::Result<()> {
    let alpha = 4.0;
    for (label, r) in [("coherent", 0.0), ("even cat", 1.0), ("odd cat", -1.0), ("r = 0.5", 0.5)] {
        let (t, s) = dip(FieldPrep::Superposition { r, alpha })?;
        println!("{label:>9}: min S_a on [0.4, 0.6] is {s:.4} at lt/pi = {t:.4}");
    }
    Ok(())
}
