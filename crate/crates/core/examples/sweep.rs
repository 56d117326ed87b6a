//! A small parameter sweep printed as CSV.
//!
//! cargo run --release --example sweep

use scv::cli::sweep::{run_sweep, SweepPoint, CSV_HEADER};
use scv::verify::search::SearchConfig;
use scv::Instance;

fn main() -> scv::Result<()> {
    let mut points = Vec::new();
    for mechanism in ["pair-independent", "sequential-dictator"] {
        for r in [3.0, 5.0] {
            for n in 3..=5 {
                points.push(SweepPoint {
                    mechanism: mechanism.into(),
                    instance: Instance::multi4(r)?,
                    n,
                });
            }
        }
    }
    println!("{CSV_HEADER}");
    for row in run_sweep(&points, &SearchConfig::default(), false) {
        println!("{}", row.csv());
    }
    Ok(())
}
