//! Run a JSON scenario and write CSV.
//!
//!     cargo run --example config_file_sweep -- path/to/run.json out.csv
//!
//! Without arguments an inline configuration is used and the table goes
//! to stdout.

use jc_entropy::sweep::{emit_csv, load_config, parse_config, run_scenario, write_csv, RunOptions};

const INLINE: &str = r#"{
  "name": "odd-cat-detuned",
  "nbar": 9,
  "k": 1,
  "delta": 1.5,
  "stark_r": 0.0,
  "field": "superposition",
  "r": -1.0,
  "t_end": 2,
  "t_count": 21,
  "columns": ["scaled_t", "S_a", "inversion"]
}"#;

fn main() -> jc_entropy::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let scenario = match args.first() {
        Some(src) => load_config(src)?,
        None => parse_config(INLINE)?,
    };
    let rows = run_scenario(&scenario, RunOptions::default())?;
    match args.get(1) {
        Some(out) => emit_csv(&rows, &scenario.columns, out),
        None => write_csv(&rows, &scenario.columns, std::io::stdout().lock()),
    }
}
