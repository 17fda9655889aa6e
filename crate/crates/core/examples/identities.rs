//! Big-integer checks of the alternating partial-sum identity and of the
//! closed-form witnesses at large rows.

use bcbp::analysis::{check_identity_alt_sum, sharp_witness};

fn main() -> bcbp::Result<()> {
    let mut checked = 0;
    for n in 1..=200 {
        for l in 0..n {
            assert!(check_identity_alt_sum(n, l)?, "n = {n}, l = {l}");
            checked += 1;
        }
    }
    println!("alternating partial sums: {checked} identities hold");

    let w = sharp_witness(50)?;
    println!("row {} has a nontrivial bisection with {} zeros", w.n(), w.zero_count());
    Ok(())
}
