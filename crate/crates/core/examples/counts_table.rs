//! Nontrivial counts with family marks, rows 1..=N, and the share of rows
//! that only have trivial bisections.
//!
//!     cargo run --example counts_table -- 80

use std::collections::BTreeMap;

use bcbp::analysis::{classify_families, density_stat};
use bcbp::{solve_folded, Limits};
use rayon::prelude::*;

fn main() -> bcbp::Result<()> {
    let top: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(62);
    let counts: BTreeMap<u32, u64> = (1..=top)
        .into_par_iter()
        .map(|n| solve_folded(n, &Limits::default()).map(|r| (n, r.j_hat)))
        .collect::<bcbp::Result<_>>()?;

    for (&n, &j) in counts.iter().filter(|(_, &j)| j > 0) {
        let marks: Vec<&str> = classify_families(n as u64).into_iter().map(|t| t.glyph()).collect();
        println!("{n:>4} {j:>3}  {}", marks.join(" "));
    }
    println!("rows with only trivial bisections: {}", density_stat(&counts, top)?);
    Ok(())
}
