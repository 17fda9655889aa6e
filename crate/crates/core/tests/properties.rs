use std::collections::BTreeSet;

use bcbp::arithmetic::{finite_difference_degree, lagrange_coefficients};
use bcbp::cli::ResultRecord;
use bcbp::interpolation::alternate_signs;
use bcbp::sieve::{brute_force_folded, FoldedVector};
use bcbp::{solve_folded, Limits, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

proptest! {
    #[test]
    fn interpolant_degree_matches_differences(data in prop::collection::vec(-50i64..50, 1..14)) {
        let big: Vec<BigInt> = data.iter().copied().map(BigInt::from).collect();
        let p = lagrange_coefficients(&big).unwrap();
        let expected = finite_difference_degree(&data).unwrap();
        prop_assert_eq!(p.degree(), expected);
        for (x, y) in big.iter().enumerate() {
            prop_assert_eq!(p.eval(&Rational::from_integer(x.into())), Rational::from_integer(y.clone()));
        }
    }

    #[test]
    fn alternation_is_an_involution(v in prop::collection::vec(prop::sample::select(vec![-1i8, 1]), 0..40)) {
        prop_assert_eq!(alternate_signs(&alternate_signs(&v)), v);
    }

    #[test]
    fn sieve_agrees_with_brute_force(n in 1u32..=22) {
        let report = solve_folded(n, &Limits::default()).unwrap();
        let mut sieve: BTreeSet<FoldedVector> = report.solutions.iter().cloned().collect();
        if n % 2 == 1 {
            sieve.extend(report.solutions.iter().map(FoldedVector::negated));
        }
        sieve.insert(FoldedVector::trivial(n).unwrap());
        let brute: BTreeSet<FoldedVector> = brute_force_folded(n, u128::MAX).unwrap().into_iter().collect();
        prop_assert_eq!(sieve, brute);
    }

    #[test]
    fn records_round_trip(n in 1u32..=70) {
        let rec = ResultRecord::from_report(&solve_folded(n, &Limits::default()).unwrap());
        prop_assert_eq!(ResultRecord::from_json(&rec.to_json_line().unwrap()).unwrap(), rec);
    }

    #[test]
    fn thread_count_does_not_change_results(n in 30u32..=64, threads in 2usize..6) {
        let serial = solve_folded(n, &Limits { threads: Some(1), ..Limits::default() }).unwrap();
        let parallel = solve_folded(n, &Limits { threads: Some(threads), ..Limits::default() }).unwrap();
        prop_assert!(serial.same_result(&parallel));
    }
}
