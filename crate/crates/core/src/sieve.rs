//! Folded bisections by progressive congruence filtering.
//!
//! For row `n` the folded unknowns are `x_0 ..= x_m` in `{-1, 0, 1}` with
//! `sum x_i C(n,i) = rhs_constant(n)`. Walking the modulus chain, every
//! surviving partial assignment is extended over the variables that become
//! active at the next modulus and kept only when its partial sum is
//! congruent to the right-hand side. The last modulus is `2^n`, which exceeds
//! the range of any partial sum, so the final congruence is the equation.

use std::collections::HashMap;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::analysis;
use crate::arithmetic::{binomial_row, folded_len, gcd_chain, pow2, ModulusChain, PascalRow};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_FRONTIER: u64 = 50_000_000;

/// Trit vector over the folded half-row.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FoldedVector {
    n: u32,
    entries: Vec<i8>,
}

impl FoldedVector {
    pub fn new(n: u32, entries: Vec<i8>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRow);
        }
        let expected = folded_len(n);
        if entries.len() != expected {
            return Err(Error::LengthMismatch {
                n,
                len: entries.len(),
                expected,
            });
        }
        if let Some(&bad) = entries.iter().find(|e| !(-1..=1).contains(*e)) {
            return Err(Error::InvalidEntry {
                value: bad.into(),
                expected: "-1, 0, 1",
            });
        }
        Ok(FoldedVector { n, entries })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn zero_count(&self) -> usize {
        self.entries.iter().filter(|&&e| e == 0).count()
    }

    pub fn negated(&self) -> FoldedVector {
        FoldedVector {
            n: self.n,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    /// The solution every row has: alternating signs for even `n`, all
    /// zeros for odd `n`.
    pub fn trivial(n: u32) -> Result<FoldedVector> {
        let len = folded_len(n);
        let entries = if n % 2 == 0 {
            (0..len).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect()
        } else {
            vec![0; len]
        };
        FoldedVector::new(n, entries)
    }

    pub fn is_trivial(&self) -> bool {
        FoldedVector::trivial(self.n).is_ok_and(|t| t == *self)
    }

    /// Checks the defining equation by direct summation over a fresh row.
    pub fn is_solution(&self) -> bool {
        binomial_row(self.n).signed_sum(&self.entries) == rhs_constant(self.n)
    }
}

impl fmt::Display for FoldedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bracketed(f, &self.entries)
    }
}

pub(crate) fn write_bracketed(f: &mut fmt::Formatter<'_>, entries: &[i8]) -> fmt::Result {
    write!(f, "[")?;
    for (i, e) in entries.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{e}")?;
    }
    write!(f, "]")
}

/// Frontier element: trits for the leading variables and their exact
/// partial sum `sum_{j < t} values[j] * C(n,j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialAssignment {
    pub values: Vec<i8>,
    pub partial_sum: BigInt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_frontier: u64,
    /// `Some(1)` runs single-threaded; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_frontier: DEFAULT_MAX_FRONTIER,
            threads: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub n: u32,
    /// Nontrivial solutions, odd rows counted up to negation.
    pub j_hat: u64,
    /// Nontrivial solutions before identifying `x` with `-x` on odd rows.
    pub j_tilde: u64,
    /// Number of full sign-vector bisections of the row.
    pub j_full: BigInt,
    /// Canonical nontrivial solutions in lexicographic order.
    pub solutions: Vec<FoldedVector>,
    /// Frontier size after each congruence step.
    pub step_profile: Vec<u64>,
    pub chain: ModulusChain,
    pub elapsed: Duration,
}

impl SolveReport {
    /// Equality on everything except wall time.
    pub fn same_result(&self, other: &SolveReport) -> bool {
        self.n == other.n
            && self.j_hat == other.j_hat
            && self.j_tilde == other.j_tilde
            && self.j_full == other.j_full
            && self.solutions == other.solutions
            && self.step_profile == other.step_profile
            && self.chain == other.chain
    }
}

/// Right-hand side of the folded equation: `0` for odd `n`, otherwise
/// `(-1)^(n/2+1) * C(n,n/2) / 2`.
pub fn rhs_constant(n: u32) -> BigInt {
    if n % 2 == 1 {
        return BigInt::zero();
    }
    let half: BigInt = binomial_row(n).get(n as usize / 2) / 2;
    if (n / 2) % 2 == 0 {
        -half
    } else {
        half
    }
}

/// Largest possible `|partial sum - rhs|`, which must stay below `2^n` for
/// the final congruence to pin down equality.
pub fn range_bound(n: u32) -> BigInt {
    let row = binomial_row(n);
    let vars = folded_len(n);
    row.coefficients()[..vars].iter().sum::<BigInt>() + rhs_constant(n).abs()
}

struct Extensions {
    trits: Vec<Vec<i8>>,
    by_residue: HashMap<BigInt, Vec<u32>>,
    sums: Vec<BigInt>,
}

/// All trit assignments to `row[start..end]` in lexicographic order, bucketed
/// by their partial sum modulo `modulus`.
fn extensions(row: &PascalRow, start: usize, end: usize, modulus: &BigInt) -> Extensions {
    let width = end - start;
    let mut trits: Vec<Vec<i8>> = vec![Vec::new()];
    for _ in 0..width {
        trits = trits
            .into_iter()
            .flat_map(|t| {
                [-1i8, 0, 1].into_iter().map(move |v| {
                    let mut next = t.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    let coeffs = &row.coefficients()[start..end];
    let sums: Vec<BigInt> = trits
        .iter()
        .map(|t| {
            t.iter()
                .zip(coeffs)
                .fold(BigInt::zero(), |acc, (&v, c)| match v {
                    1 => acc + c,
                    -1 => acc - c,
                    _ => acc,
                })
        })
        .collect();
    let mut by_residue: HashMap<BigInt, Vec<u32>> = HashMap::new();
    for (i, s) in sums.iter().enumerate() {
        by_residue.entry(s.mod_floor(modulus)).or_default().push(i as u32);
    }
    Extensions {
        trits,
        by_residue,
        sums,
    }
}

fn run_with_threads<T: Send>(threads: Option<usize>, job: impl FnOnce() -> T + Send) -> T {
    match threads {
        Some(t) if t > 1 => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(job),
            Err(_) => job(),
        },
        _ => job(),
    }
}

/// Enumerate every nontrivial folded solution of row `n`.
pub fn solve_folded(n: u32, limits: &Limits) -> Result<SolveReport> {
    if n == 0 {
        return Err(Error::ZeroRow);
    }
    let parallel = limits.threads != Some(1);
    run_with_threads(limits.threads, || solve_inner(n, limits, parallel))
}

fn solve_inner(n: u32, limits: &Limits, parallel: bool) -> Result<SolveReport> {
    let start = Instant::now();
    let row = binomial_row(n);
    let chain = gcd_chain(n)?;
    let rhs = rhs_constant(n);

    if range_bound(n) >= pow2(n) {
        return Err(Error::TheoremViolation(format!(
            "partial sums for n = {n} can reach 2^n; the final congruence is not an equality"
        )));
    }

    let mut frontier = vec![PartialAssignment {
        values: Vec::new(),
        partial_sum: BigInt::zero(),
    }];
    let mut profile = Vec::with_capacity(chain.len());
    let mut active = 0usize;

    for (step, (modulus, prefix)) in chain.steps().enumerate() {
        let ext = extensions(&row, active, prefix, modulus);
        let matches = |p: &PartialAssignment| -> Option<&Vec<u32>> {
            ext.by_residue.get(&(&rhs - &p.partial_sum).mod_floor(modulus))
        };
        let hits: Vec<Option<&Vec<u32>>> = if parallel {
            frontier.par_iter().map(matches).collect()
        } else {
            frontier.iter().map(matches).collect()
        };
        let size: u64 = hits.iter().flatten().map(|b| b.len() as u64).sum();
        if size > limits.max_frontier {
            return Err(Error::ResourceLimit {
                step,
                frontier: size,
                limit: limits.max_frontier,
                profile,
            });
        }

        let grow = |(p, hit): (&PartialAssignment, &Option<&Vec<u32>>)| -> Vec<PartialAssignment> {
            hit.map_or_else(Vec::new, |bucket| {
                bucket
                    .iter()
                    .map(|&i| {
                        let i = i as usize;
                        let mut values = Vec::with_capacity(prefix);
                        values.extend_from_slice(&p.values);
                        values.extend_from_slice(&ext.trits[i]);
                        PartialAssignment {
                            values,
                            partial_sum: &p.partial_sum + &ext.sums[i],
                        }
                    })
                    .collect()
            })
        };
        let next: Vec<Vec<PartialAssignment>> = if parallel {
            frontier.par_iter().zip(hits.par_iter()).map(grow).collect()
        } else {
            frontier.iter().zip(hits.iter()).map(grow).collect()
        };
        drop(hits);
        frontier = next.into_iter().flatten().collect();
        profile.push(frontier.len() as u64);
        active = prefix;
    }

    let mut raw = Vec::with_capacity(frontier.len());
    for p in frontier {
        if p.partial_sum != rhs {
            return Err(Error::TheoremViolation(format!(
                "sieve survivor for n = {n} passed every congruence but misses the equation"
            )));
        }
        let v = FoldedVector::new(n, p.values)?;
        if !v.is_trivial() {
            raw.push(v);
        }
    }

    let j_tilde = raw.len() as u64;
    let solutions = if n % 2 == 1 {
        canonical_pairs(&raw)?
    } else {
        raw
    };
    let j_hat = solutions.len() as u64;
    let j_full = analysis::full_count(n, &solutions);

    Ok(SolveReport {
        n,
        j_hat,
        j_tilde,
        j_full,
        solutions,
        step_profile: profile,
        chain,
        elapsed: start.elapsed(),
    })
}

/// Odd rows: the set must be closed under negation; keep the member of each
/// pair whose first nonzero entry is `+1`.
fn canonical_pairs(raw: &[FoldedVector]) -> Result<Vec<FoldedVector>> {
    if raw.len() % 2 == 1 {
        return Err(Error::TheoremViolation(
            "odd row produced an odd number of nontrivial solutions".into(),
        ));
    }
    let mut kept = Vec::with_capacity(raw.len() / 2);
    for v in raw {
        if raw.binary_search(&v.negated()).is_err() {
            return Err(Error::TheoremViolation(format!(
                "negation of {v} missing from the solution set"
            )));
        }
        if v.entries().iter().find(|&&e| e != 0) == Some(&1) {
            kept.push(v.clone());
        }
    }
    Ok(kept)
}

/// Exhaustive search of `{-1,0,1}^(m+1)`, trivial solution included. Refuses
/// to run when `3^(m+1)` exceeds `cap`.
///
/// Coefficients are formed independently of [`binomial_row`] and the sums
/// are carried in `i128`.
pub fn brute_force_folded(n: u32, cap: u128) -> Result<Vec<FoldedVector>> {
    if n == 0 {
        return Err(Error::ZeroRow);
    }
    let len = folded_len(n);
    let cost = 3u128.checked_pow(len as u32).unwrap_or(u128::MAX);
    if cost > cap || n > 120 {
        return Err(Error::OracleRefused { n, cost, cap });
    }
    let coeffs = small_row(n);
    let target: i128 = if n % 2 == 1 {
        0
    } else {
        let half = coeffs_full(n)[n as usize / 2] / 2;
        if (n / 2) % 2 == 0 {
            -half
        } else {
            half
        }
    };

    let mut out = Vec::new();
    let mut digits = vec![0u8; len];
    for _ in 0..cost {
        let sum: i128 = digits
            .iter()
            .zip(&coeffs)
            .map(|(&d, c)| (d as i128 - 1) * c)
            .sum();
        if sum == target {
            out.push(FoldedVector::new(n, digits.iter().map(|&d| d as i8 - 1).collect())?);
        }
        // odometer, last position fastest -> lexicographic order
        for d in digits.iter_mut().rev() {
            if *d < 2 {
                *d += 1;
                break;
            }
            *d = 0;
        }
    }
    Ok(out)
}

fn coeffs_full(n: u32) -> Vec<i128> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut c: i128 = 1;
    out.push(c);
    for k in 1..=n as i128 {
        c = c * (n as i128 - k + 1) / k;
        out.push(c);
    }
    out
}

fn small_row(n: u32) -> Vec<i128> {
    let mut full = coeffs_full(n);
    full.truncate(folded_len(n));
    full
}

pub const FULL_BRUTE_FORCE_MAX_N: u32 = 20;

/// Every `delta` in `{-1,1}^(n+1)` with `sum delta_k C(n,k) = 0`, in
/// lexicographic order.
pub fn brute_force_full(n: u32) -> Result<Vec<analysis::SignVector>> {
    if n > FULL_BRUTE_FORCE_MAX_N {
        return Err(Error::OracleRefused {
            n,
            cost: 1u128 << (n + 1),
            cap: 1u128 << (FULL_BRUTE_FORCE_MAX_N + 1),
        });
    }
    let coeffs = coeffs_full(n);
    let width = n as usize + 1;
    let mut out = Vec::new();
    // bit (width-1-k) set means delta_k = +1, so counting up is lexicographic
    for mask in 0u64..(1u64 << width) {
        let sum: i128 = (0..width)
            .map(|k| {
                if mask >> (width - 1 - k) & 1 == 1 {
                    coeffs[k]
                } else {
                    -coeffs[k]
                }
            })
            .sum();
        if sum == 0 {
            let entries = (0..width)
                .map(|k| if mask >> (width - 1 - k) & 1 == 1 { 1 } else { -1 })
                .collect();
            out.push(analysis::SignVector::new(n, entries)?);
        }
    }
    Ok(out)
}
