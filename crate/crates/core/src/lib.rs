//! Exact enumeration of binomial coefficient bisections.
//!
//! A bisection of row `n` of Pascal's triangle is a sign vector
//! `delta in {-1,1}^(n+1)` with `sum delta_k C(n,k) = 0`. Folding the row in
//! half turns the search into a trit equation over `C(n,0..=m)`, which
//! [`sieve::solve_folded`] solves by filtering partial assignments through a
//! chain of moduli built from gcds of the row's tail.
//!
//! - [`arithmetic`]: Pascal rows, the modulus chain, exact interpolation.
//! - [`sieve`]: the congruence sieve and brute-force oracles.
//! - [`analysis`]: unfolding, solution counts, families, witnesses, balance.
//! - [`interpolation`]: the degree criterion and the gap of a row.
//! - [`cli`]: command-line front end, record format and result cache.

pub mod analysis;
pub mod arithmetic;
pub mod cli;
pub mod error;
pub mod interpolation;
pub mod known;
pub mod sieve;

pub use analysis::{FamilyTag, SignVector};
pub use arithmetic::{binomial_row, gcd_chain, ModulusChain, PascalRow, Rational, RationalPolynomial};
pub use error::{Error, Result};
pub use sieve::{solve_folded, FoldedVector, Limits, SolveReport};
