//! Exact integer and rational primitives: Pascal rows, the gcd chain of a
//! row's tail, forward differences and exact Lagrange interpolation.

use std::fmt;
use std::ops::Sub;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always stored reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Number of unknowns in the folded equation for row `n`: `n/2` when `n` is
/// even, `(n+1)/2` when `n` is odd.
pub fn folded_len(n: u32) -> usize {
    if n % 2 == 0 {
        n as usize / 2
    } else {
        (n as usize + 1) / 2
    }
}

pub fn pow2(n: u32) -> BigInt {
    BigInt::one() << n as usize
}

/// One row of Pascal's triangle, `C(n,0) ..= C(n,n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PascalRow {
    n: u32,
    coefficients: Vec<BigInt>,
}

impl PascalRow {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// `C(n,k)`; zero outside `0..=n`.
    pub fn get(&self, k: usize) -> BigInt {
        self.coefficients.get(k).cloned().unwrap_or_default()
    }

    /// `sum_k signs[k] * C(n,k)` over the leading `signs.len()` coefficients.
    pub fn signed_sum(&self, signs: &[i8]) -> BigInt {
        signs
            .iter()
            .zip(&self.coefficients)
            .fold(BigInt::zero(), |mut acc, (&s, c)| {
                match s {
                    1 => acc += c,
                    -1 => acc -= c,
                    _ => {}
                }
                acc
            })
    }
}

/// Exact row `n` of Pascal's triangle via the multiplicative formula.
pub fn binomial_row(n: u32) -> PascalRow {
    let mut coefficients = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    coefficients.push(c.clone());
    for k in 0..n {
        c = c * (n - k) / (k + 1);
        coefficients.push(c.clone());
    }
    PascalRow { n, coefficients }
}

/// Strictly increasing modulus list driving the sieve, together with the
/// number of leading unknowns that are still "active" (coefficient not
/// divisible by the modulus) at each step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulusChain {
    n: u32,
    moduli: Vec<BigInt>,
    prefix_lengths: Vec<usize>,
}

impl ModulusChain {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn moduli(&self) -> &[BigInt] {
        &self.moduli
    }

    pub fn prefix_lengths(&self) -> &[usize] {
        &self.prefix_lengths
    }

    pub fn len(&self) -> usize {
        self.moduli.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moduli.is_empty()
    }

    pub fn variable_count(&self) -> usize {
        folded_len(self.n)
    }

    pub fn steps(&self) -> impl Iterator<Item = (&BigInt, usize)> + '_ {
        self.moduli.iter().zip(self.prefix_lengths.iter().copied())
    }
}

/// Build the modulus chain for row `n`.
///
/// `D_i = gcd{C(n,j) : i <= j <= floor(n/2)}` for `i >= 1`; the distinct
/// values greater than one, in order of increasing `i`, are the moduli, and
/// `2^n` closes the chain. The active prefix for a modulus `D_s` is the
/// smallest `s` attaining it, clipped to the number of unknowns.
pub fn gcd_chain(n: u32) -> Result<ModulusChain> {
    if n == 0 {
        return Err(Error::ZeroRow);
    }
    let row = binomial_row(n);
    let half = n as usize / 2;
    let vars = folded_len(n);

    // tail[i] = D_i for 1 <= i <= half
    let mut tail = vec![BigInt::zero(); half + 1];
    let mut g = BigInt::zero();
    for i in (1..=half).rev() {
        g = g.gcd(&row.coefficients[i]);
        tail[i] = g.clone();
    }

    let mut moduli: Vec<BigInt> = Vec::new();
    let mut prefix_lengths = Vec::new();
    for (i, d) in tail.iter().enumerate().skip(1) {
        if d.is_one() || moduli.last() == Some(d) {
            continue;
        }
        moduli.push(d.clone());
        prefix_lengths.push(i.min(vars));
    }

    let top = pow2(n);
    if moduli.last() != Some(&top) {
        moduli.push(top);
        prefix_lengths.push(vars);
    }

    Ok(ModulusChain {
        n,
        moduli,
        prefix_lengths,
    })
}

/// Degree of the polynomial interpolating `values` on `0, 1, ..., len-1`:
/// the largest `k` whose `k`-th forward difference sequence is not
/// identically zero, or `-1` for all-zero data.
pub fn finite_difference_degree<T>(values: &[T]) -> Result<isize>
where
    T: Clone + Zero + Sub<Output = T>,
{
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut level: Vec<T> = values.to_vec();
    let mut degree = -1;
    let mut k = 0;
    while !level.is_empty() {
        if level.iter().all(Zero::is_zero) {
            break;
        }
        degree = k;
        level = level
            .windows(2)
            .map(|w| w[1].clone() - w[0].clone())
            .collect();
        k += 1;
    }
    Ok(degree)
}

/// Polynomial with exact rational coefficients, lowest power first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolynomial {
    coefficients: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(mut coefficients: Vec<Rational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        RationalPolynomial { coefficients }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coefficient(&self, k: usize) -> Rational {
        self.coefficients.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coefficients.len() as isize - 1
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coefficients
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Coefficients as `p/q` strings (integers print without a denominator).
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coefficients.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag} ")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Exact Lagrange interpolant of `values` on the nodes `0, 1, ..., len-1`,
/// assembled from the basis polynomials `prod_{j != i} (x - j) / (i - j)`.
pub fn lagrange_coefficients(values: &[BigInt]) -> Result<RationalPolynomial> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    let len = values.len();

    // node polynomial W(x) = prod_j (x - j), lowest power first
    let mut node_poly = vec![BigInt::one()];
    for j in 0..len {
        let mut next = vec![BigInt::zero(); node_poly.len() + 1];
        for (k, c) in node_poly.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * j;
        }
        node_poly = next;
    }

    let mut acc = vec![Rational::zero(); len];
    for (i, y) in values.iter().enumerate() {
        if y.is_zero() {
            continue;
        }
        // W(x) / (x - i) by synthetic division
        let mut basis = vec![BigInt::zero(); len];
        let mut carry = BigInt::zero();
        for k in (1..node_poly.len()).rev() {
            carry = &node_poly[k] + carry * i;
            basis[k - 1] = carry.clone();
        }
        // prod_{j != i} (i - j) = i! * (len-1-i)! * (-1)^(len-1-i)
        let mut denom = factorial(i) * factorial(len - 1 - i);
        if (len - 1 - i) % 2 == 1 {
            denom = -denom;
        }
        for (a, b) in acc.iter_mut().zip(basis) {
            *a += Rational::new(b * y, denom.clone());
        }
    }
    Ok(RationalPolynomial::new(acc))
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, j| acc * j)
}

/// Deterministic primality by trial division over `6k +/- 1`.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p % 2 == 0 || p % 3 == 0 {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 || p % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

pub fn is_perfect_square(x: u128) -> bool {
    let r = x.sqrt();
    r * r == x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p.into(), d.into())
    }

    #[test]
    fn small_rows() {
        assert_eq!(binomial_row(4).coefficients(), ints(&[1, 4, 6, 4, 1]).as_slice());
        assert_eq!(binomial_row(0).coefficients(), ints(&[1]).as_slice());
        assert_eq!(binomial_row(14).get(7), BigInt::from(3432));
        assert_eq!(
            &binomial_row(19).coefficients()[..10],
            ints(&[1, 19, 171, 969, 3876, 11628, 27132, 50388, 75582, 92378]).as_slice()
        );
    }

    #[test]
    fn row_invariants_up_to_200() {
        let mut prev = binomial_row(0);
        for n in 1..=200u32 {
            let row = binomial_row(n);
            let c = row.coefficients();
            assert!(c[0].is_one() && c[n as usize].is_one());
            for k in 0..=n as usize {
                assert_eq!(c[k], c[n as usize - k]);
            }
            for k in 1..n as usize {
                assert_eq!(c[k], prev.get(k - 1) + prev.get(k));
            }
            assert_eq!(c.iter().sum::<BigInt>(), pow2(n));
            prev = row;
        }
    }

    #[test]
    fn chain_for_19() {
        let chain = gcd_chain(19).unwrap();
        assert_eq!(
            chain.moduli(),
            ints(&[19, 323, 646, 8398, 92378, 524288]).as_slice()
        );
        assert_eq!(chain.prefix_lengths()[0], 1);
        assert_eq!(chain.prefix_lengths()[1], 3);
        assert_eq!(*chain.prefix_lengths().last().unwrap(), 10);
    }

    #[test]
    fn chain_for_4() {
        // D_1 = gcd(4, 6) = 2, D_2 = 6
        let chain = gcd_chain(4).unwrap();
        assert_eq!(chain.moduli(), ints(&[2, 6, 16]).as_slice());
        assert_eq!(chain.prefix_lengths(), &[1, 2, 2]);
    }

    #[test]
    fn chain_edge_rows() {
        assert!(matches!(gcd_chain(0), Err(Error::ZeroRow)));
        let one = gcd_chain(1).unwrap();
        assert_eq!(one.moduli(), ints(&[2]).as_slice());
        assert_eq!(one.prefix_lengths(), &[1]);
        // D_1 = 1 for n = 6 and is dropped
        assert_eq!(gcd_chain(6).unwrap().moduli(), ints(&[5, 20, 64]).as_slice());
    }

    #[test]
    fn chain_invariants_up_to_200() {
        for n in 1..=200u32 {
            let row = binomial_row(n);
            let chain = gcd_chain(n).unwrap();
            let vars = chain.variable_count();
            let r = chain.len();
            assert_eq!(chain.moduli()[r - 1], pow2(n));
            assert_eq!(chain.prefix_lengths()[r - 1], vars);
            for w in chain.moduli().windows(2) {
                assert!(w[0] < w[1], "n={n}");
            }
            for w in chain.moduli()[..r - 1].windows(2) {
                assert!(w[1].is_multiple_of(&w[0]), "n={n}");
            }
            for w in chain.prefix_lengths().windows(2) {
                assert!(w[0] <= w[1]);
            }
            for (d, t) in chain.steps().take(r - 1) {
                for j in t..vars {
                    assert!(row.get(j).is_multiple_of(d), "n={n} d={d} j={j}");
                }
                if t >= 1 {
                    assert!(!row.get(t - 1).is_multiple_of(d), "n={n} d={d} t={t}");
                }
            }
        }
    }

    #[test]
    fn difference_degrees() {
        assert_eq!(finite_difference_degree(&ints(&[1, 1, 1])).unwrap(), 0);
        assert_eq!(finite_difference_degree(&ints(&[0, 1, 4, 9])).unwrap(), 2);
        assert_eq!(
            finite_difference_degree(&ints(&[1, 1, -1, -1, 1, 1, -1, 1, 1])).unwrap(),
            7
        );
        assert_eq!(finite_difference_degree(&ints(&[0, 0])).unwrap(), -1);
        assert_eq!(finite_difference_degree(&[3i64]).unwrap(), 0);
        assert!(matches!(
            finite_difference_degree::<i64>(&[]),
            Err(Error::EmptyInput)
        ));
    }

    #[test]
    fn interpolant_of_alternated_bisection_for_8() {
        let p = lagrange_coefficients(&ints(&[1, 1, -1, -1, 1, 1, -1, 1, 1])).unwrap();
        let expected = vec![
            q(1, 1),
            q(0, 1),
            q(28, 9),
            q(-481, 90),
            q(203, 72),
            q(-47, 72),
            q(5, 72),
            q(-1, 360),
        ];
        assert_eq!(p.coefficients(), expected.as_slice());
        assert_eq!(p.degree(), 7);
        assert_eq!(
            p.to_string(),
            "1 + 28/9 x^2 - 481/90 x^3 + 203/72 x^4 - 47/72 x^5 + 5/72 x^6 - 1/360 x^7"
        );
    }

    #[test]
    fn interpolant_trivial_cases() {
        let c = lagrange_coefficients(&ints(&[5, 5, 5])).unwrap();
        assert_eq!(c.coefficients(), &[q(5, 1)]);
        let id = lagrange_coefficients(&ints(&[0, 1, 2, 3])).unwrap();
        assert_eq!(id.coefficients(), &[q(0, 1), q(1, 1)]);
        let zero = lagrange_coefficients(&ints(&[0, 0, 0])).unwrap();
        assert_eq!(zero.degree(), -1);
        assert_eq!(zero.to_string(), "0");
        assert!(lagrange_coefficients(&[]).is_err());
    }

    #[test]
    fn primes_and_squares() {
        let small: Vec<u64> = (0..40).filter(|&p| is_prime(p)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(999_983));
        assert!(!is_prime(999_981));
        assert!(is_perfect_square(1156));
        assert!(!is_perfect_square(1155));
        assert!(is_perfect_square(0));
    }
}
