//! Enumerate the nontrivial folded bisections of one row.
//!
//!     cargo run --example solve_row -- 34

use bcbp::analysis::{compute_jn, expand_folded};
use bcbp::{solve_folded, Limits};

fn main() -> bcbp::Result<()> {
    let n: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(34);
    let report = solve_folded(n, &Limits::default())?;

    println!("row {n}: {} nontrivial folded solutions in {:?}", report.j_hat, report.elapsed);
    for s in &report.solutions {
        println!("  {s}  ({} full bisections)", expand_folded(s)?.len());
    }
    println!("total bisections J_{n} = {}", compute_jn(&report));
    Ok(())
}
