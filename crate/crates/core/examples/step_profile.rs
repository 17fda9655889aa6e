//! How the frontier evolves through the modulus chain, and that the thread
//! count does not change the answer.

use bcbp::{gcd_chain, solve_folded, Limits};

fn main() -> bcbp::Result<()> {
    let n = 62;
    let chain = gcd_chain(n)?;
    let report = solve_folded(n, &Limits::default())?;
    for ((d, len), size) in chain.moduli().iter().zip(chain.prefix_lengths()).zip(&report.step_profile) {
        println!("mod {d:>20}  first {len:>2} variables  {size:>8} partial assignments");
    }

    let serial = solve_folded(n, &Limits { threads: Some(1), ..Limits::default() })?;
    assert!(serial.same_result(&report));
    println!("{} solutions, serial {:?}, parallel {:?}", report.j_hat, serial.elapsed, report.elapsed);

    let tight = Limits { max_frontier: 1_000, ..Limits::default() };
    match solve_folded(n, &tight) {
        Err(e) => println!("with a 1000-entry budget: {e}"),
        Ok(_) => println!("fits in 1000 entries"),
    }
    Ok(())
}
