//! Results layered on top of the sieve: unfolding to full sign vectors,
//! solution counts, the known infinite families, closed-form witnesses and
//! the balance property for rows where `n` and `(n+1)/2` are both prime.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arithmetic::{binomial_row, folded_len, is_perfect_square, is_prime, pow2, Rational};
use crate::error::{Error, Result};
use crate::sieve::{write_bracketed, FoldedVector, SolveReport};

/// Full `+/-1` vector of length `n+1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector {
    n: u32,
    entries: Vec<i8>,
}

impl SignVector {
    pub fn new(n: u32, entries: Vec<i8>) -> Result<Self> {
        let expected = n as usize + 1;
        if entries.len() != expected {
            return Err(Error::LengthMismatch {
                n,
                len: entries.len(),
                expected,
            });
        }
        if let Some(&bad) = entries.iter().find(|e| **e != 1 && **e != -1) {
            return Err(Error::InvalidEntry {
                value: bad.into(),
                expected: "-1, 1",
            });
        }
        Ok(SignVector { n, entries })
    }

    /// Infers `n` from the length.
    pub fn from_entries(entries: Vec<i8>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyInput);
        }
        SignVector::new(entries.len() as u32 - 1, entries)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn negated(&self) -> SignVector {
        SignVector {
            n: self.n,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    /// `sum delta_k C(n,k) == 0`.
    pub fn bisects_row(&self) -> bool {
        binomial_row(self.n).signed_sum(&self.entries).is_zero()
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bracketed(f, &self.entries)
    }
}

/// All full bisections that fold onto `folded`. Each zero entry doubles the
/// count; the global negations are not included.
pub fn expand_folded(folded: &FoldedVector) -> Result<Vec<SignVector>> {
    let n = folded.n();
    if !folded.is_solution() {
        return Err(Error::NotASolution { n });
    }
    let len = n as usize + 1;
    let mut base = vec![0i8; len];
    if n % 2 == 0 {
        let k = n as usize / 2;
        base[k] = if k % 2 == 0 { 1 } else { -1 };
    }
    let mut zeros = Vec::new();
    for (i, &e) in folded.entries().iter().enumerate() {
        let mirror = n as usize - i;
        if e == 0 {
            zeros.push(i);
        } else {
            base[i] = e;
            base[mirror] = e;
        }
    }

    let mut out = Vec::with_capacity(1 << zeros.len());
    for mask in 0u64..(1u64 << zeros.len()) {
        let mut w = base.clone();
        for (bit, &i) in zeros.iter().enumerate() {
            let s = if mask >> bit & 1 == 1 { 1 } else { -1 };
            w[i] = s;
            w[n as usize - i] = -s;
        }
        let v = SignVector::new(n, w)?;
        if !v.bisects_row() {
            return Err(Error::TheoremViolation(format!(
                "unfolded vector {v} does not bisect row {n}"
            )));
        }
        out.push(v);
    }
    out.sort();
    Ok(out)
}

/// Full solution count from the canonical nontrivial folded solutions:
/// `2 + 2 sum 2^zeros` for even `n`, `2^((n+1)/2) + 2 sum 2^zeros` for odd `n`.
pub fn full_count(n: u32, canonical: &[FoldedVector]) -> BigInt {
    let trivial = if n % 2 == 0 {
        BigInt::from(2)
    } else {
        pow2((n + 1) / 2)
    };
    let nontrivial: BigInt = canonical.iter().map(|s| pow2(s.zero_count() as u32)).sum();
    trivial + nontrivial * 2
}

pub fn compute_jn(report: &SolveReport) -> BigInt {
    full_count(report.n, &report.solutions)
}

/// Most full bisections [`all_full_solutions`] will materialize.
pub const MAX_LISTED_SOLUTIONS: u64 = 1 << 24;

/// Every full bisection of row `n` reconstructed from a solve: the trivial
/// family and each canonical solution unfolded, both signs.
pub fn all_full_solutions(report: &SolveReport) -> Result<Vec<SignVector>> {
    if report.j_full > BigInt::from(MAX_LISTED_SOLUTIONS) {
        return Err(Error::TooManySolutions {
            n: report.n,
            count: report.j_full.to_string(),
            cap: MAX_LISTED_SOLUTIONS,
        });
    }
    let mut out = BTreeSet::new();
    let trivial = FoldedVector::trivial(report.n)?;
    for s in std::iter::once(&trivial).chain(&report.solutions) {
        for w in expand_folded(s)? {
            out.insert(w.negated());
            out.insert(w);
        }
    }
    Ok(out.into_iter().collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyTag {
    /// `n = 6k + 2`, `k >= 1`
    Heart,
    /// `n = 4k^2 - 3`, `k >= 2`
    Sharp,
    /// `n = 4k^2 - 2`, `k >= 2`
    Spade,
    /// `5n^2 + 12n + 8` a perfect square, `n >= 2`
    Club,
    /// `8n^2 + 1` a perfect square, `n` odd and `n >= 3`
    Flat,
    /// `n + 1` an odd prime; forces only trivial solutions
    Dagger,
    /// `n` and `(n+1)/2` both prime; solutions are balanced
    A005383,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 7] = [
        FamilyTag::Heart,
        FamilyTag::Sharp,
        FamilyTag::Spade,
        FamilyTag::Club,
        FamilyTag::Flat,
        FamilyTag::Dagger,
        FamilyTag::A005383,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::Heart => "heart",
            FamilyTag::Sharp => "sharp",
            FamilyTag::Spade => "spade",
            FamilyTag::Club => "club",
            FamilyTag::Flat => "flat",
            FamilyTag::Dagger => "dagger",
            FamilyTag::A005383 => "a005383",
        }
    }

    pub fn glyph(self) -> &'static str {
        match self {
            FamilyTag::Heart => "♥",
            FamilyTag::Sharp => "♯",
            FamilyTag::Spade => "♠",
            FamilyTag::Club => "♣",
            FamilyTag::Flat => "♭",
            FamilyTag::Dagger => "†",
            FamilyTag::A005383 => "A005383",
        }
    }

    pub fn contains(self, n: u64) -> bool {
        match self {
            FamilyTag::Heart => n >= 8 && n % 6 == 2,
            FamilyTag::Sharp => quadratic_family(n, 3),
            FamilyTag::Spade => quadratic_family(n, 2),
            FamilyTag::Club => {
                let n = n as u128;
                n >= 2 && is_perfect_square(5 * n * n + 12 * n + 8)
            }
            FamilyTag::Flat => {
                let n = n as u128;
                n >= 3 && n % 2 == 1 && is_perfect_square(8 * n * n + 1)
            }
            FamilyTag::Dagger => n >= 2 && is_prime(n + 1),
            FamilyTag::A005383 => n % 2 == 1 && is_prime(n) && is_prime((n + 1) / 2),
        }
    }
}

/// `n = 4k^2 - offset` for some `k >= 2`.
fn quadratic_family(n: u64, offset: u64) -> bool {
    let m = n + offset;
    m % 4 == 0 && m / 4 >= 4 && is_perfect_square((m / 4) as u128)
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown family tag {s:?}"))
    }
}

pub fn classify_families(n: u64) -> BTreeSet<FamilyTag> {
    FamilyTag::ALL.into_iter().filter(|t| t.contains(n)).collect()
}

/// Ascending members of a family up to `bound`, by direct scan.
pub fn pell_members(tag: FamilyTag, bound: u64) -> Vec<u64> {
    (1..=bound).filter(|&n| tag.contains(n)).collect()
}

/// `sum_{j=0}^{l} (-1)^j C(n,j) == (-1)^l C(n-1,l)`, both sides exact.
pub fn check_identity_alt_sum(n: u32, l: u32) -> Result<bool> {
    if n == 0 {
        return Err(Error::ZeroRow);
    }
    if l >= n {
        return Err(Error::OutOfRange { n, index: l });
    }
    let row = binomial_row(n);
    let lhs = (0..=l as usize).fold(BigInt::zero(), |acc, j| {
        if j % 2 == 0 {
            acc + row.get(j)
        } else {
            acc - row.get(j)
        }
    });
    let prev = binomial_row(n - 1).get(l as usize);
    let rhs = if l % 2 == 0 { prev } else { -prev };
    Ok(lhs == rhs)
}

/// Closed-form nontrivial solution for `n = 6k + 2`.
pub fn heart_witness(k: u32) -> Result<FoldedVector> {
    if k == 0 {
        return Err(Error::OutOfRange { n: 2, index: 0 });
    }
    let n = 6 * k + 2;
    let k = k as usize;
    let alt = |j: usize| if j % 2 == 0 { 1 } else { -1 };
    let mut entries: Vec<i8> = (0..2 * k).map(alt).collect();
    entries.push(-1);
    entries.push(0);
    entries.extend((2 * k + 2..=3 * k).map(alt));
    verified_witness(n, entries)
}

/// Closed-form nontrivial solution for `n = 4k^2 - 3`: the block
/// `+1, -1, -1, +1` ending at index `2k^2 - k`.
pub fn sharp_witness(k: u32) -> Result<FoldedVector> {
    if k < 2 {
        return Err(Error::OutOfRange { n: 1, index: k });
    }
    let n = 4 * k * k - 3;
    let s = (2 * k * k - k) as usize;
    let mut entries = vec![0i8; folded_len(n)];
    entries[s - 3..=s].copy_from_slice(&[1, -1, -1, 1]);
    verified_witness(n, entries)
}

fn verified_witness(n: u32, entries: Vec<i8>) -> Result<FoldedVector> {
    let v = FoldedVector::new(n, entries)?;
    if v.is_trivial() || !v.is_solution() {
        return Err(Error::TheoremViolation(format!(
            "closed-form witness {v} fails for n = {n}"
        )));
    }
    Ok(v)
}

/// `eta_j = (-1)^j (delta_j + delta_{n-j}) / 2` with its sign counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceRecord {
    pub n: u32,
    pub eta: Vec<i8>,
    pub plus_count: usize,
    pub minus_count: usize,
}

impl BalanceRecord {
    pub fn is_balanced(&self) -> bool {
        self.plus_count == self.minus_count
    }
}

/// Computes the folded sign pattern of an odd-row bisection. When `n` and
/// `(n+1)/2` are both prime the pattern must be balanced with `eta_0 = 0`;
/// anything else is reported as a theorem violation.
pub fn check_balance(full: &SignVector) -> Result<BalanceRecord> {
    let n = full.n();
    if n % 2 == 0 {
        return Err(Error::RequiresOddRow(n));
    }
    if !full.bisects_row() {
        return Err(Error::NotASolution { n });
    }
    let d = full.entries();
    let eta: Vec<i8> = (0..folded_len(n))
        .map(|j| {
            let folded = (d[j] + d[n as usize - j]) / 2;
            if j % 2 == 0 {
                folded
            } else {
                -folded
            }
        })
        .collect();
    let plus_count = eta.iter().filter(|&&e| e == 1).count();
    let minus_count = eta.iter().filter(|&&e| e == -1).count();
    let record = BalanceRecord {
        n,
        eta,
        plus_count,
        minus_count,
    };
    if FamilyTag::A005383.contains(n as u64) && (!record.is_balanced() || record.eta[0] != 0) {
        return Err(Error::TheoremViolation(format!(
            "{full} is unbalanced ({} vs {}) for n = {n}",
            record.plus_count, record.minus_count
        )));
    }
    Ok(record)
}

/// `#{k <= upto : count_k = 0} / upto`.
pub fn density_stat(counts: &BTreeMap<u32, u64>, upto: u32) -> Result<Rational> {
    if upto == 0 {
        return Err(Error::ZeroRow);
    }
    let mut zero = 0u64;
    for k in 1..=upto {
        match counts.get(&k) {
            Some(0) => zero += 1,
            Some(_) => {}
            None => return Err(Error::MissingReport(k)),
        }
    }
    Ok(Rational::new(zero.into(), upto.into()))
}
