//! Loads a problem file and prints its regularity report as JSON.
//!
//! `cargo run --example from_json -- crates/core/examples/data/hirzebruch-s2.json`

use mreg::problem::Problem;
use mreg::regularity::ModuleAnalysis;
use mreg::find_positive_coarsening_vector;

fn main() -> mreg::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/hirzebruch-s2.json").into());
    let pr = Problem::from_path(std::path::Path::new(&path), None)?;
    let p = pr.presentation()?;
    let v = find_positive_coarsening_vector(pr.ring.degrees())?;
    let report = ModuleAnalysis::new(&pr.ring, &p)?.report(&v, 2, false)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    Ok(())
}
