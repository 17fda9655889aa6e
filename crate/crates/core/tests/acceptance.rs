//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Built with `harness = false` so every line is printed.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use bcbp::analysis::{
    all_full_solutions, check_balance, check_identity_alt_sum, classify_families, compute_jn,
    density_stat, heart_witness, sharp_witness, FamilyTag, SignVector,
};
use bcbp::arithmetic::{gcd_chain, lagrange_coefficients};
use bcbp::interpolation::degree_criterion;
use bcbp::known::{FOLDED_SOLUTIONS, NONTRIVIAL_COUNTS};
use bcbp::sieve::{brute_force_folded, brute_force_full, FoldedVector};
use bcbp::{solve_folded, Limits, Rational, SolveReport};
use num_bigint::BigInt;

type Outcome = Result<String, Vec<String>>;

struct Ctx {
    reports: BTreeMap<u32, SolveReport>,
}

impl Ctx {
    fn report(&self, n: u32) -> &SolveReport {
        &self.reports[&n]
    }
}

fn finish(failures: Vec<String>, summary: String) -> Outcome {
    if failures.is_empty() {
        Ok(summary)
    } else {
        Err(failures)
    }
}

fn table_counts(ctx: &Ctx) -> Outcome {
    let expected: BTreeMap<u32, u64> = [
        (8, 1), (13, 1), (14, 2), (20, 1), (24, 2), (26, 1), (29, 1), (31, 2), (32, 1), (33, 1),
        (34, 5), (35, 2), (38, 2), (41, 4), (44, 2), (47, 1), (48, 1), (50, 1), (54, 1), (56, 1),
        (61, 1), (62, 8),
    ]
    .into_iter()
    .collect();
    let mut failures = Vec::new();
    for n in 1..=62 {
        let got = ctx.report(n).j_hat;
        let want = expected.get(&n).copied().unwrap_or(0);
        if got != want {
            failures.push(format!("n = {n}: computed {got}, expected {want}"));
        }
    }
    finish(failures, "62 rows exact".into())
}

fn listed_vectors(ctx: &Ctx) -> Outcome {
    let rows = [8, 13, 14, 20, 24, 26, 29, 31, 32, 33, 34, 35, 38, 41, 47, 48, 50, 54, 61, 62, 63];
    let listed: BTreeMap<u32, &[&[i8]]> = FOLDED_SOLUTIONS.iter().copied().collect();
    let as_set = |n: u32, vs: &[&[i8]]| -> BTreeSet<FoldedVector> {
        vs.iter()
            .map(|v| FoldedVector::new(n, v.to_vec()).expect("listed vector is well formed"))
            .collect()
    };
    let mut failures = Vec::new();
    for n in rows {
        let got: BTreeSet<FoldedVector> = ctx.report(n).solutions.iter().cloned().collect();
        let want = as_set(n, listed[&n]);
        if got != want {
            failures.push(format!("n = {n}: {} computed vs {} listed", got.len(), want.len()));
        }
    }
    // The n = 44 block repeats one vector; the listed vectors must be found
    // and the solver must return as many as the count column says.
    let got44: BTreeSet<FoldedVector> = ctx.report(44).solutions.iter().cloned().collect();
    let want44 = as_set(44, listed[&44]);
    if !want44.is_subset(&got44) || got44.len() != 2 {
        failures.push(format!("n = 44: {} computed, listed {}", got44.len(), want44.len()));
    }
    finish(failures, format!("{} rows plus n = 44 caveat", rows.len()))
}

fn walkthrough_19(ctx: &Ctx) -> Outcome {
    let mut failures = Vec::new();
    let chain: Vec<BigInt> = gcd_chain(19).expect("n >= 1").moduli().to_vec();
    let want: Vec<BigInt> = [19u64, 323, 646, 8398, 92378, 524288].map(BigInt::from).to_vec();
    if chain != want {
        failures.push(format!("chain {chain:?}"));
    }
    let r = ctx.report(19);
    if r.step_profile.iter().any(|&s| s != 1) {
        failures.push(format!("step profile {:?}", r.step_profile));
    }
    if r.j_hat != 0 {
        failures.push(format!("j_hat {}", r.j_hat));
    }
    finish(failures, "chain and profile exact".into())
}

fn oracle_equivalence(ctx: &Ctx) -> Outcome {
    let mut failures = Vec::new();
    for n in 1..=20 {
        let r = ctx.report(n);
        let mut sieve: BTreeSet<FoldedVector> = r.solutions.iter().cloned().collect();
        if n % 2 == 1 {
            sieve.extend(r.solutions.iter().map(FoldedVector::negated));
        }
        sieve.insert(FoldedVector::trivial(n).unwrap());
        let brute: BTreeSet<FoldedVector> =
            brute_force_folded(n, u128::MAX).unwrap().into_iter().collect();
        if sieve != brute {
            failures.push(format!("n = {n}: sieve {} vs brute force {}", sieve.len(), brute.len()));
        }
    }
    for n in 1..=16 {
        let all = brute_force_full(n).unwrap();
        let jn = compute_jn(ctx.report(n));
        if jn != BigInt::from(all.len()) {
            failures.push(format!("n = {n}: J_n {jn} vs enumeration {}", all.len()));
        }
    }
    let j14 = compute_jn(ctx.report(14));
    if j14 != BigInt::from(12) {
        failures.push(format!("J_14 = {j14}, expected 12"));
    }
    finish(failures, "n <= 20 folded, n <= 16 full".into())
}

fn row_8_polynomial() -> Outcome {
    let data: Vec<BigInt> = [1, 1, -1, -1, 1, 1, -1, 1, 1].map(BigInt::from).to_vec();
    let p = lagrange_coefficients(&data).unwrap();
    let want: Vec<Rational> = [(1, 1), (0, 1), (28, 9), (-481, 90), (203, 72), (-47, 72), (5, 72), (-1, 360)]
        .iter()
        .map(|&(a, b)| Rational::new(BigInt::from(a), BigInt::from(b)))
        .collect();
    let mut failures = Vec::new();
    if p.coefficients() != want.as_slice() {
        failures.push(format!("coefficients {p}"));
    }
    if p.degree() != 7 {
        failures.push(format!("degree {}", p.degree()));
    }
    finish(failures, p.to_string())
}

fn identities() -> Outcome {
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 1..=100 {
        for l in 0..n {
            cases += 1;
            if !check_identity_alt_sum(n, l).unwrap_or(false) {
                failures.push(format!("alternating sum n = {n}, l = {l}"));
            }
        }
    }
    for k in 1..=50 {
        cases += 1;
        if let Err(e) = heart_witness(k) {
            failures.push(format!("n = {}: {e}", 6 * k + 2));
        }
        if k >= 2 {
            cases += 1;
            if let Err(e) = sharp_witness(k) {
                failures.push(format!("n = {}: {e}", 4 * k * k - 3));
            }
        }
    }
    finish(failures, format!("{cases} exact checks"))
}

fn theorem_realizations(ctx: &Ctx) -> Outcome {
    let mut failures = Vec::new();
    for n in (1..=62).filter(|&n| FamilyTag::Dagger.contains(n as u64)) {
        if ctx.report(n).j_hat != 0 {
            failures.push(format!("n = {n}: n + 1 prime but {} nontrivial", ctx.report(n).j_hat));
        }
    }
    let mut balanced = 0usize;
    for n in [5, 13, 37] {
        let all = all_full_solutions(ctx.report(n)).unwrap();
        for v in all {
            balanced += 1;
            match check_balance(&v) {
                Ok(rec) if rec.is_balanced() => {}
                Ok(_) => failures.push(format!("{v} unbalanced")),
                Err(e) => failures.push(e.to_string()),
            }
        }
    }
    let mut vectors = 0usize;
    for n in 1..=12u32 {
        for mask in 0u32..(1 << (n + 1)) {
            let entries = (0..=n).map(|k| if mask >> k & 1 == 1 { 1 } else { -1 }).collect();
            let v = SignVector::new(n, entries).unwrap();
            vectors += 1;
            if let Err(e) = degree_criterion(&v) {
                failures.push(e.to_string());
            }
        }
    }
    finish(failures, format!("{balanced} balance checks, {vectors} sign vectors"))
}

fn families_and_density(ctx: &Ctx) -> Outcome {
    let mut failures = Vec::new();
    for &(n, _, marks) in NONTRIVIAL_COUNTS.iter().filter(|r| r.0 <= 144) {
        let printed: BTreeSet<FamilyTag> =
            marks.split_whitespace().map(|m| m.parse().unwrap()).collect();
        // a005383 membership is not one of the printed marks
        let produced: BTreeSet<FamilyTag> = classify_families(n as u64)
            .into_iter()
            .filter(|&t| t != FamilyTag::A005383)
            .collect();
        if printed != produced {
            failures.push(format!("n = {n}: printed {printed:?}, produced {produced:?}"));
        }
    }
    let counts: BTreeMap<u32, u64> = (1..=62).map(|n| (n, ctx.report(n).j_hat)).collect();
    let d = density_stat(&counts, 62).unwrap();
    if d != Rational::new(40.into(), 62.into()) {
        failures.push(format!("density {d}"));
    }
    finish(failures, format!("density {d}"))
}

fn large_rows() -> Outcome {
    let mut failures = Vec::new();
    for (n, want) in [(146, 1), (152, 1), (154, 0)] {
        let got = solve_folded(n, &Limits::default()).map(|r| r.j_hat);
        if got.as_ref().ok() != Some(&want) {
            failures.push(format!("n = {n}: {got:?}, expected {want}"));
        }
    }
    finish(failures, "146, 152, 154".into())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let reports = (1..=63)
        .map(|n| (n, solve_folded(n, &Limits::default()).expect("rows up to 63 solve")))
        .collect();
    let ctx = Ctx { reports };
    println!("solved rows 1..=63 in {:.2?}", start.elapsed());

    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("1 nontrivial counts n <= 62", Box::new(|| table_counts(&ctx))),
        ("2 listed folded solutions", Box::new(|| listed_vectors(&ctx))),
        ("3 row 19 walkthrough", Box::new(|| walkthrough_19(&ctx))),
        ("4 brute-force oracle", Box::new(|| oracle_equivalence(&ctx))),
        ("5 row 8 interpolant", Box::new(row_8_polynomial)),
        ("6 identities and witnesses", Box::new(identities)),
        ("7 dagger, balance, degree", Box::new(|| theorem_realizations(&ctx))),
        ("8 family marks and density", Box::new(|| families_and_density(&ctx))),
        ("9 large rows", Box::new(large_rows)),
    ];

    let mut failed = 0;
    for (name, check) in criteria {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err(vec!["panicked".into()]));
        match outcome {
            Ok(summary) => println!("PASS {name:<30} {:>9.2?}  {summary}", t.elapsed()),
            Err(failures) => {
                failed += 1;
                println!("FAIL {name:<30} {:>9.2?}", t.elapsed());
                for f in failures.iter().take(10) {
                    println!("       {f}");
                }
                if failures.len() > 10 {
                    println!("       ... {} more", failures.len() - 10);
                }
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
