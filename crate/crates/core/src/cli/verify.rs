//! Invariant suites behind `bcbp verify`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::analysis::{
    all_full_solutions, check_balance, check_identity_alt_sum, classify_families, compute_jn,
    heart_witness, pell_members, sharp_witness, FamilyTag, SignVector,
};
use crate::error::Error;
use crate::interpolation::degree_criterion;
use crate::known::NONTRIVIAL_COUNTS;
use crate::sieve::{brute_force_folded, brute_force_full, solve_folded, FoldedVector, Limits};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Oracle,
    Counts,
    Identities,
    Degree,
    Balance,
    Families,
    Dagger,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Oracle,
        Suite::Counts,
        Suite::Identities,
        Suite::Degree,
        Suite::Balance,
        Suite::Families,
        Suite::Dagger,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Counts => "counts",
            Suite::Identities => "identities",
            Suite::Degree => "degree",
            Suite::Balance => "balance",
            Suite::Families => "families",
            Suite::Dagger => "dagger",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyParams {
    pub max_n: u32,
    pub max_k: u32,
    pub limits: Limits,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            max_n: 20,
            max_k: 50,
            limits: Limits::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub scope: String,
    pub cases: usize,
    pub failures: Vec<String>,
    /// Set when a library call reported a theorem violation.
    pub violation: bool,
}

impl SuiteOutcome {
    fn new(suite: Suite, scope: String) -> Self {
        SuiteOutcome {
            suite,
            scope,
            cases: 0,
            failures: Vec::new(),
            violation: false,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn error(&mut self, context: impl fmt::Display, e: Error) {
        self.cases += 1;
        if matches!(e, Error::TheoremViolation(_)) {
            self.violation = true;
        }
        self.failures.push(format!("{context}: {e}"));
    }
}

pub fn run_suite(suite: Suite, params: &VerifyParams) -> SuiteOutcome {
    match suite {
        Suite::Oracle => oracle(params),
        Suite::Counts => counts(params),
        Suite::Identities => identities(params),
        Suite::Degree => degree(),
        Suite::Balance => balance(params),
        Suite::Families => families(),
        Suite::Dagger => dagger(params),
    }
}

fn oracle(p: &VerifyParams) -> SuiteOutcome {
    let mut out = SuiteOutcome::new(Suite::Oracle, format!("n <= {}", p.max_n));
    for n in 1..=p.max_n {
        let report = match solve_folded(n, &p.limits) {
            Ok(r) => r,
            Err(e) => {
                out.error(format_args!("n = {n}"), e);
                continue;
            }
        };
        let brute = match brute_force_folded(n, u128::MAX) {
            Ok(b) => b,
            Err(e) => {
                out.error(format_args!("n = {n} oracle"), e);
                continue;
            }
        };
        let mut sieve: BTreeSet<FoldedVector> = report.solutions.iter().cloned().collect();
        if n % 2 == 1 {
            sieve.extend(report.solutions.iter().map(FoldedVector::negated));
        }
        sieve.insert(FoldedVector::trivial(n).expect("n >= 1"));
        let brute: BTreeSet<FoldedVector> = brute.into_iter().collect();
        out.check(sieve == brute, || {
            format!("n = {n}: sieve {} vectors, brute force {}", sieve.len(), brute.len())
        });
        out.check(report.solutions.iter().all(FoldedVector::is_solution), || {
            format!("n = {n}: emitted vector fails direct summation")
        });
    }
    out
}

fn counts(p: &VerifyParams) -> SuiteOutcome {
    let top = p.max_n.min(16);
    let mut out = SuiteOutcome::new(Suite::Counts, format!("n <= {top}"));
    for n in 1..=top {
        let report = match solve_folded(n, &p.limits) {
            Ok(r) => r,
            Err(e) => {
                out.error(format_args!("n = {n}"), e);
                continue;
            }
        };
        match brute_force_full(n) {
            Ok(all) => {
                let jn = compute_jn(&report);
                out.check(jn == BigInt::from(all.len()), || {
                    format!("n = {n}: count formula {jn}, enumeration {}", all.len())
                });
                match all_full_solutions(&report) {
                    Ok(unfolded) => out.check(unfolded == all, || {
                        format!("n = {n}: unfolded solutions differ from enumeration")
                    }),
                    Err(e) => out.error(format_args!("n = {n} unfold"), e),
                }
            }
            Err(e) => out.error(format_args!("n = {n} oracle"), e),
        }
    }
    out
}

fn identities(p: &VerifyParams) -> SuiteOutcome {
    let mut out = SuiteOutcome::new(
        Suite::Identities,
        format!("alternating sums n <= 100, witnesses k <= {}", p.max_k),
    );
    for n in 1..=100 {
        for l in 0..n {
            match check_identity_alt_sum(n, l) {
                Ok(ok) => out.check(ok, || format!("alternating sum n = {n}, l = {l}")),
                Err(e) => out.error(format_args!("n = {n}, l = {l}"), e),
            }
        }
    }
    for k in 1..=p.max_k {
        if let Err(e) = heart_witness(k) {
            out.error(format_args!("6k+2 witness k = {k}"), e);
        } else {
            out.cases += 1;
        }
        if k >= 2 {
            if let Err(e) = sharp_witness(k) {
                out.error(format_args!("4k^2-3 witness k = {k}"), e);
            } else {
                out.cases += 1;
            }
        }
    }
    out
}

/// Exhaustive over `{-1,1}^(n+1)` for `n <= 12`.
fn degree() -> SuiteOutcome {
    let mut out = SuiteOutcome::new(Suite::Degree, "all sign vectors, n <= 12".into());
    for n in 1..=12u32 {
        let width = n + 1;
        for mask in 0u32..(1 << width) {
            let entries = (0..width)
                .map(|k| if mask >> k & 1 == 1 { 1 } else { -1 })
                .collect();
            let v = SignVector::new(n, entries).expect("valid sign vector");
            match degree_criterion(&v) {
                Ok(_) => out.cases += 1,
                Err(e) => out.error(&v, e),
            }
        }
    }
    out
}

fn balance(p: &VerifyParams) -> SuiteOutcome {
    let rows: Vec<u32> = (1..=37)
        .filter(|&n| FamilyTag::A005383.contains(n as u64))
        .collect();
    let mut out = SuiteOutcome::new(Suite::Balance, format!("n in {rows:?}"));
    for n in rows {
        let all = solve_folded(n, &p.limits).and_then(|r| all_full_solutions(&r));
        match all {
            Ok(all) => {
                for v in all {
                    match check_balance(&v) {
                        Ok(rec) => out.check(rec.is_balanced(), || format!("{v} unbalanced")),
                        Err(e) => out.error(&v, e),
                    }
                }
            }
            Err(e) => out.error(format_args!("n = {n}"), e),
        }
    }
    out
}

/// Family predicates against the reference marks for `n <= 144`: every
/// printed mark must be produced, and every produced mark must agree with
/// the row's count (`dagger` rows have no nontrivial solutions, the other
/// families always do).
fn families() -> SuiteOutcome {
    let mut out = SuiteOutcome::new(Suite::Families, "n <= 144".into());
    for &(n, count, marks) in NONTRIVIAL_COUNTS.iter().filter(|r| r.0 <= 144) {
        let tags = classify_families(n as u64);
        for mark in marks.split_whitespace() {
            let tag: FamilyTag = mark.parse().expect("reference marks are valid tags");
            out.check(tags.contains(&tag), || format!("n = {n}: {mark} not produced"));
        }
        for tag in tags {
            match tag {
                FamilyTag::Dagger => {
                    out.check(count == 0, || format!("n = {n}: dagger row with count {count}"))
                }
                FamilyTag::A005383 => {}
                _ => out.check(count > 0, || format!("n = {n}: {tag} row with count 0")),
            }
        }
    }
    let lists: [(FamilyTag, u64, &[u64]); 4] = [
        (FamilyTag::Club, 40_000, &[14, 103, 713, 4894, 33551]),
        (FamilyTag::Flat, 2_000, &[35, 1189]),
        (FamilyTag::Sharp, 200, &[13, 33, 61, 97, 141, 193]),
        (FamilyTag::Spade, 200, &[14, 34, 62, 98, 142, 194]),
    ];
    for (tag, bound, expected) in lists {
        let got = pell_members(tag, bound);
        out.check(got == expected, || format!("{tag} members up to {bound}: {got:?}"));
    }
    out
}

fn dagger(p: &VerifyParams) -> SuiteOutcome {
    let mut out = SuiteOutcome::new(Suite::Dagger, "n <= 62 with n+1 an odd prime".into());
    for n in (1..=62).filter(|&n| FamilyTag::Dagger.contains(n as u64)) {
        match solve_folded(n, &p.limits) {
            Ok(r) => out.check(r.j_hat == 0, || format!("n = {n}: {} nontrivial", r.j_hat)),
            Err(e) => out.error(format_args!("n = {n}"), e),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suites_pass() {
        let params = VerifyParams {
            max_n: 10,
            max_k: 5,
            ..VerifyParams::default()
        };
        for suite in [Suite::Oracle, Suite::Counts, Suite::Identities, Suite::Families] {
            let outcome = run_suite(suite, &params);
            assert!(outcome.passed(), "{suite}: {:?}", outcome.failures);
            assert!(outcome.cases > 0);
        }
    }

    #[test]
    fn suite_names_parse() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
