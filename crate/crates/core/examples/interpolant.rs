//! Exact interpolant of an alternated bisection, plus sample points for
//! plotting.

use bcbp::analysis::SignVector;
use bcbp::arithmetic::lagrange_coefficients;
use bcbp::interpolation::{alternate_signs, degree_criterion, sample_points};
use num_bigint::BigInt;

fn main() -> bcbp::Result<()> {
    let delta = SignVector::from_entries(vec![1, -1, -1, 1, 1, -1, -1, -1, 1])?;
    let data: Vec<BigInt> = alternate_signs(delta.entries()).into_iter().map(BigInt::from).collect();
    let p = lagrange_coefficients(&data)?;

    println!("P(x) = {p}");
    println!("degree {} < {}: {}", p.degree(), delta.n(), degree_criterion(&delta)?);
    for (x, y) in sample_points(&p, delta.n(), 17)? {
        println!("{x:>5}  {y}");
    }
    Ok(())
}
