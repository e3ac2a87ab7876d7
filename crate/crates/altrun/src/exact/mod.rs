//! Exact arithmetic kernel.
//!
//! Everything downstream is built on four value types: arbitrary-precision
//! integers ([`Int`]), rationals ([`Rat`]), dense univariate polynomials
//! ([`UniPoly`]) and sparse multivariate Laurent polynomials ([`LaurentPoly`]).
//! All operations are exact; there is no floating-point or modular arithmetic
//! anywhere in this crate.

use std::fmt;

mod comb;
mod laurent;
mod unipoly;

pub use comb::{binomial, factorial, stirling2};
pub use laurent::{LaurentPoly, Monomial};
pub use unipoly::{rational_substitute, UniPoly};

/// Unbounded signed integer.
pub type Int = num_bigint::BigInt;

/// Exact rational number (always reduced, positive denominator).
pub type Rat = num_rational::BigRational;

/// Errors from exact-arithmetic operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactError {
    /// Long division left a nonzero remainder (or a non-integral quotient step).
    NotDivisible,
    /// Division by the zero polynomial.
    DivisionByZero,
    /// `clear_power` is smaller than the degree of the polynomial being substituted into.
    PowerTooSmall { clear_power: usize, degree: usize },
    /// Argument outside the defined range, e.g. `stirling2(n, k)` with `k > n`.
    RangeError { n: u64, k: u64 },
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::NotDivisible => write!(f, "exact division failed: nonzero remainder"),
            ExactError::DivisionByZero => write!(f, "division by zero polynomial"),
            ExactError::PowerTooSmall { clear_power, degree } => write!(
                f,
                "clear power {clear_power} is smaller than the polynomial degree {degree}"
            ),
            ExactError::RangeError { n, k } => write!(f, "argument out of range: n={n}, k={k}"),
        }
    }
}

impl std::error::Error for ExactError {}
