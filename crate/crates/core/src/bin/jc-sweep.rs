//! Run a scenario over its time grid and write the entropy table as CSV.

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use jc_entropy::sweep::{emit_csv, load_config, run_scenario, write_csv, RunOptions, TimeGrid, PRESETS};

#[derive(Parser, Debug)]
#[command(name = "jc-sweep", version, about = "Partial entropies of the k-quanta Jaynes-Cummings model")]
struct Args {
    /// Preset name (fig1a .. fig3c) or path to a JSON scenario file.
    #[arg(long, default_value = "fig1a")]
    scenario: String,

    /// Output CSV path; stdout when omitted.
    #[arg(long)]
    out: Option<std::path::PathBuf>,

    /// Add S_a_oracle,S_f_oracle columns from brute-force propagation.
    #[arg(long)]
    with_oracle: bool,

    /// Override the time grid, `start:end:count` in units of lambda t / pi.
    #[arg(long)]
    grid: Option<String>,

    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,

    /// List the built-in presets and exit.
    #[arg(long)]
    list_presets: bool,
}

fn run(args: Args) -> jc_entropy::Result<()> {
    if args.list_presets {
        println!("{}", PRESETS.join("\n"));
        return Ok(());
    }
    let mut scenario = load_config(&args.scenario)?;
    if let Some(grid) = &args.grid {
        scenario.grid = grid.parse::<TimeGrid>()?;
    }
    if args.threads == Some(0) {
        return Err(jc_entropy::Error::Config("--threads must be at least 1".into()));
    }
    log::info!("running {} on {} points", scenario.name, scenario.grid.count);
    let rows = run_scenario(&scenario, RunOptions { threads: args.threads, with_oracle: args.with_oracle })?;
    match &args.out {
        Some(path) => emit_csv(&rows, &scenario.columns, path),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            write_csv(&rows, &scenario.columns, &mut lock)?;
            lock.flush()?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Args::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("jc-sweep: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
