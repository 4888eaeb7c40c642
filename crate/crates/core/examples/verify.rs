//! Runs the verification suites on reduced grids and prints a summary per
//! suite. Pass `full` to use the default grids.
//!
//! ```text
//! cargo run --release --example verify -- full
//! ```

use classical_pieri::verify::{run_suites, GridOverrides};

fn main() -> classical_pieri::Result<()> {
    let full = std::env::args().any(|a| a == "full");
    let overrides = if full { GridOverrides::default() } else { GridOverrides { max_size: Some(4), max_r: Some(3), max_rank: Some(2) } };
    let reports = run_suites("all", overrides)?;
    for report in &reports {
        println!("{}", report.summary());
    }
    if let Some(first) = reports.first() {
        println!("\nfirst report as JSON:\n{}", first.to_json());
    }
    Ok(())
}
