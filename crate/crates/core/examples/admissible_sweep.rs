//! Sweeps the parameter square and writes the CSV table.
//!
//! `cargo run --release --example admissible_sweep -- 200 sweep.csv`

use std::path::PathBuf;

use scherk_hopf::sweep::{run_sweep, summarize, write_csv_atomic, SweepConfig, SweepMode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let grid: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(100);
    let out = PathBuf::from(args.next().unwrap_or_else(|| "sweep.csv".into()));

    for mode in [SweepMode::Ab, SweepMode::Pq] {
        let rows = run_sweep(&SweepConfig::new(grid, mode))?;
        println!("{mode:?}: {}", summarize(&rows));
        if mode == SweepMode::Ab {
            write_csv_atomic(&rows, &out)?;
            println!("wrote {}", out.display());
        }
    }
    Ok(())
}
