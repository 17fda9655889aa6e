//! Gap of small rows over the complete set of bisections.

use bcbp::interpolation::{gap_from_report, GAP_MAX_N};
use bcbp::{solve_folded, Limits};

fn main() -> bcbp::Result<()> {
    for n in 1..=GAP_MAX_N.min(30) {
        let report = solve_folded(n, &Limits::default())?;
        let gap = gap_from_report(&report)?;
        let witness = gap.witness.map(|w| w.to_string()).unwrap_or_else(|| "-".into());
        println!("{n:>3}  gamma {:>2}  over {:>9} solutions  {witness}", gap.gamma, report.j_full);
    }
    Ok(())
}
