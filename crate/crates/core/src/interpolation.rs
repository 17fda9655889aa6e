//! Bisections seen as interpolation data. Flipping every other sign of a
//! bisection gives data on `0..=n` whose interpolant has degree below `n`;
//! the gap of a row is the largest drop in degree over all non-constant
//! data obtained this way.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::analysis::{all_full_solutions, SignVector};
use crate::arithmetic::{finite_difference_degree, RationalPolynomial, Rational};
use crate::error::{Error, Result};
use crate::sieve::SolveReport;

/// Largest row for which the full solution set is enumerated.
pub const GAP_MAX_N: u32 = 40;

/// `j -> (-1)^j * values[j]`; an involution.
pub fn alternate_signs(values: &[i8]) -> Vec<i8> {
    values
        .iter()
        .enumerate()
        .map(|(j, &v)| if j % 2 == 0 { v } else { -v })
        .collect()
}

/// Whether the alternated data of `delta` interpolates with degree `< n`.
/// The answer is cross-checked against the direct row sum; disagreement is
/// a theorem violation.
pub fn degree_criterion(delta: &SignVector) -> Result<bool> {
    let data: Vec<BigInt> = alternate_signs(delta.entries())
        .into_iter()
        .map(BigInt::from)
        .collect();
    let low_degree = finite_difference_degree(&data)? < delta.n() as isize;
    if low_degree != delta.bisects_row() {
        return Err(Error::TheoremViolation(format!(
            "degree test and row sum disagree for {delta}"
        )));
    }
    Ok(low_degree)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapReport {
    pub n: u32,
    /// Maximum of `n - degree` over non-constant data; `0` when every
    /// solution gives constant data.
    pub gamma: u32,
    /// Lexicographically smallest solution attaining `gamma`.
    pub witness: Option<SignVector>,
    /// `n - degree` for each nontrivial full solution.
    pub per_solution: BTreeMap<SignVector, u32>,
    /// Number of solutions with each gap value, trivial ones included.
    pub histogram: BTreeMap<u32, u64>,
}

fn is_alternating(d: &[i8]) -> bool {
    d.windows(2).all(|w| w[0] == -w[1])
}

fn is_antisymmetric(d: &[i8]) -> bool {
    let n = d.len() - 1;
    n % 2 == 1 && (0..d.len()).all(|i| d[i] == -d[n - i])
}

/// Trivial bisections: the two alternating vectors, and on odd rows every
/// antisymmetric vector.
pub fn is_trivial_bisection(delta: &SignVector) -> bool {
    is_alternating(delta.entries()) || is_antisymmetric(delta.entries())
}

/// Gap of row `n` from a solve result.
pub fn gap_from_report(report: &SolveReport) -> Result<GapReport> {
    if report.n > GAP_MAX_N {
        return Err(Error::GapNotComputed {
            n: report.n,
            limit: GAP_MAX_N,
        });
    }
    let solutions = all_full_solutions(report)?;
    if BigInt::from(solutions.len()) != report.j_full {
        return Err(Error::TheoremViolation(format!(
            "unfolded {} solutions for n = {} but the count formula gives {}",
            solutions.len(),
            report.n,
            report.j_full
        )));
    }
    gap(report.n, &solutions)
}

/// Gap of row `n` over a complete set of full bisections.
///
/// Each solution's degree drop is also checked against the truncation
/// characterization: the drop is the number of leading prefixes
/// `delta_0..=delta_k`, for `k = n, n-1, ...`, that bisect row `k`.
pub fn gap(n: u32, solutions: &[SignVector]) -> Result<GapReport> {
    if n > GAP_MAX_N {
        return Err(Error::GapNotComputed { n, limit: GAP_MAX_N });
    }
    check_complete(n, solutions)?;

    let rows = small_rows(n);
    let measure = |delta: &SignVector| -> Result<(u32, bool)> {
        let data: Vec<i64> = alternate_signs(delta.entries())
            .into_iter()
            .map(i64::from)
            .collect();
        let degree = finite_difference_degree(&data)?;
        let drop = n - degree as u32;
        let prefixes = (0..=n as usize)
            .rev()
            .take_while(|&k| {
                let row = &rows[k];
                let s: i64 = (0..=k).map(|j| delta.entries()[j] as i64 * row[j]).sum();
                s == 0
            })
            .count() as u32;
        if prefixes != drop {
            return Err(Error::TheoremViolation(format!(
                "{delta}: degree drop {drop} but {prefixes} bisecting prefixes"
            )));
        }
        Ok((drop, degree == 0))
    };
    let measured: Vec<Result<(u32, bool)>> = solutions.par_iter().map(measure).collect();

    let mut report = GapReport {
        n,
        gamma: 0,
        witness: None,
        per_solution: BTreeMap::new(),
        histogram: BTreeMap::new(),
    };
    for (delta, m) in solutions.iter().zip(measured) {
        let (drop, constant) = m?;
        *report.histogram.entry(drop).or_default() += 1;
        if !is_trivial_bisection(delta) {
            report.per_solution.insert(delta.clone(), drop);
        }
        if constant {
            continue;
        }
        let better = drop > report.gamma
            || (drop == report.gamma
                && report.witness.as_ref().is_some_and(|w| delta < w));
        if better || report.witness.is_none() {
            report.gamma = drop;
            report.witness = Some(delta.clone());
        }
    }
    Ok(report)
}

fn small_rows(n: u32) -> Vec<Vec<i64>> {
    let mut rows = vec![vec![1i64]];
    for k in 1..=n as usize {
        let prev = &rows[k - 1];
        let mut row = vec![1i64; k + 1];
        for j in 1..k {
            row[j] = prev[j - 1] + prev[j];
        }
        rows.push(row);
    }
    rows
}

fn check_complete(n: u32, solutions: &[SignVector]) -> Result<()> {
    let set: BTreeSet<&SignVector> = solutions.iter().collect();
    for s in solutions {
        if s.n() != n {
            return Err(Error::LengthMismatch {
                n,
                len: s.entries().len(),
                expected: n as usize + 1,
            });
        }
        if !s.bisects_row() {
            return Err(Error::NotASolution { n });
        }
        if !set.contains(&s.negated()) {
            return Err(Error::TheoremViolation(format!(
                "solution set for n = {n} is incomplete: negation of {s} missing"
            )));
        }
    }
    let alternating: Vec<i8> = (0..=n).map(|j| if j % 2 == 0 { 1 } else { -1 }).collect();
    let alternating = SignVector::new(n, alternating)?;
    let antisymmetric = set.iter().filter(|s| is_antisymmetric(s.entries())).count();
    let expected_antisymmetric = if n % 2 == 1 { 1usize << ((n + 1) / 2) } else { 0 };
    if !set.contains(&alternating) || antisymmetric != expected_antisymmetric {
        return Err(Error::TheoremViolation(format!(
            "solution set for n = {n} is incomplete: trivial family missing"
        )));
    }
    Ok(())
}

/// Exact values of `poly` at `count` equally spaced points of `[0, upper]`.
pub fn sample_points(
    poly: &RationalPolynomial,
    upper: u32,
    count: usize,
) -> Result<Vec<(Rational, Rational)>> {
    if count < 2 {
        return Err(Error::OutOfRange {
            n: upper,
            index: count as u32,
        });
    }
    let steps = BigInt::from(count - 1);
    Ok((0..count)
        .map(|i| {
            let x = Rational::new(BigInt::from(i) * upper, steps.clone());
            let y = poly.eval(&x);
            (x, y)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::lagrange_coefficients;
    use crate::sieve::{brute_force_full, solve_folded, Limits};

    fn sv(e: &[i8]) -> SignVector {
        SignVector::from_entries(e.to_vec()).unwrap()
    }

    const DELTA_8: [i8; 9] = [1, -1, -1, 1, 1, -1, -1, -1, 1];

    #[test]
    fn alternation_examples() {
        assert_eq!(alternate_signs(&DELTA_8), vec![1, 1, -1, -1, 1, 1, -1, 1, 1]);
        assert_eq!(alternate_signs(&[1, 1, 1, 1]), vec![1, -1, 1, -1]);
        assert_eq!(alternate_signs(&[1, -1, 1]), vec![1, 1, 1]);
    }

    #[test]
    fn criterion_examples() {
        assert!(degree_criterion(&sv(&DELTA_8)).unwrap());
        assert!(!degree_criterion(&sv(&[1, 1, 1, 1, 1])).unwrap());
        assert!(degree_criterion(&sv(&[1, -1, 1])).unwrap());
    }

    #[test]
    fn gap_matches_exhaustive_scan_for_8() {
        // oracle: all 512 sign vectors, keep bisections with non-constant data
        let mut oracle = 0;
        for mask in 0u32..512 {
            let d: Vec<i8> = (0..9).map(|k| if mask >> k & 1 == 1 { 1 } else { -1 }).collect();
            let v = sv(&d);
            if !v.bisects_row() {
                continue;
            }
            let data: Vec<i64> = alternate_signs(&d).into_iter().map(i64::from).collect();
            let deg = finite_difference_degree(&data).unwrap();
            if deg > 0 {
                oracle = oracle.max(8 - deg as u32);
            }
        }
        let report = gap_from_report(&solve_folded(8, &Limits::default()).unwrap()).unwrap();
        assert_eq!(report.gamma, oracle);
        assert_eq!(report.per_solution.len(), 4);
    }

    #[test]
    fn gap_on_small_odd_row() {
        let report = gap_from_report(&solve_folded(3, &Limits::default()).unwrap()).unwrap();
        assert!(report.gamma >= 1);
        assert!(report.per_solution.is_empty());
        let w = report.witness.unwrap();
        assert!(w.bisects_row());
    }

    #[test]
    fn gap_rejects_incomplete_sets() {
        let full = brute_force_full(8).unwrap();
        assert!(gap(8, &full).is_ok());
        assert!(gap(8, &full[1..]).is_err());
        let report = solve_folded(41, &Limits::default()).unwrap();
        assert!(matches!(
            gap_from_report(&report),
            Err(Error::GapNotComputed { n: 41, .. })
        ));
    }

    #[test]
    fn samples_of_the_row_8_interpolant() {
        let data: Vec<BigInt> = alternate_signs(&DELTA_8).into_iter().map(BigInt::from).collect();
        let p = lagrange_coefficients(&data).unwrap();
        let nodes = sample_points(&p, 8, 9).unwrap();
        let ys: Vec<Rational> = nodes.iter().map(|(_, y)| y.clone()).collect();
        let expected: Vec<Rational> = data.iter().cloned().map(Rational::from_integer).collect();
        assert_eq!(ys, expected);

        // the literal printed coefficients, evaluated at x = 1/2
        let printed = [(1, 1), (0, 1), (28, 9), (-481, 90), (203, 72), (-47, 72), (5, 72), (-1, 360)];
        let half = Rational::new(1.into(), 2.into());
        let oracle = printed.iter().rev().fold(Rational::from_integer(0.into()), |acc, &(p, q)| {
            acc * &half + Rational::new(p.into(), q.into())
        });
        let mid = sample_points(&p, 8, 17).unwrap();
        assert_eq!(mid[1], (half, oracle));

        let five = RationalPolynomial::new(vec![Rational::from_integer(5.into())]);
        assert!(sample_points(&five, 3, 4).unwrap().iter().all(|(_, y)| *y == Rational::from_integer(5.into())));
        assert!(sample_points(&five, 3, 1).is_err());
    }
}
