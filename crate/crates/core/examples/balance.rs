//! Folded sign patterns of odd rows where n and (n+1)/2 are both prime.
//! Past n = 37 the trivial family alone has more than 2^24 members.

use bcbp::analysis::{all_full_solutions, check_balance, FamilyTag};
use bcbp::{solve_folded, Limits};

fn main() -> bcbp::Result<()> {
    for n in (3..=37).filter(|&n| FamilyTag::A005383.contains(n as u64)) {
        let all = all_full_solutions(&solve_folded(n, &Limits::default())?)?;
        let balanced = all
            .iter()
            .map(check_balance)
            .collect::<bcbp::Result<Vec<_>>>()?
            .iter()
            .filter(|r| r.is_balanced())
            .count();
        println!("n = {n:>2}: {balanced} of {} bisections balanced", all.len());
    }
    Ok(())
}
