//! Dense univariate polynomials over `Int`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{ExactError, Int};

/// Univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending powers of the variable with no
/// trailing zero; the zero polynomial is the empty vector, so equality of
/// the representation is equality of the polynomial.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Int>,
}

impl UniPoly {
    /// Builds a polynomial from ascending coefficients, dropping trailing zeros.
    pub fn from_coeffs(coeffs: Vec<Int>) -> Self {
        let mut p = UniPoly { coeffs };
        p.normalize();
        p
    }

    /// Convenience constructor from machine integers, ascending powers.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn constant(c: Int) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `c * x^k`.
    pub fn monomial(c: Int, k: usize) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        let mut coeffs = vec![Int::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Ascending coefficient slice (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Int {
        self.coeffs.get(k).cloned().unwrap_or_else(Int::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, v: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc
    }

    /// Formal derivative: d/dx of sum c_i x^i is sum i*c_i x^(i-1).
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Int::from(i))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc * self.clone();
        }
        acc
    }

    pub fn mul_int(&self, c: &Int) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn mul_xpow(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::default();
        }
        let mut coeffs = vec![Int::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// Substitutes `x -> x^k` (k >= 1).
    pub fn compose_xpow(&self, k: usize) -> Self {
        assert!(k >= 1, "compose_xpow needs a positive power");
        let mut coeffs = vec![Int::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        if self.is_zero() {
            return Self::default();
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    /// Substitutes `x -> -x`.
    pub fn eval_neg_x(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
                .collect(),
        )
    }

    /// Coefficient reversal against an explicit degree bound:
    /// maps sum_{k<=d} c_k x^k to sum_k c_k x^(d-k).
    ///
    /// Returns `None` when the actual degree exceeds the bound.
    pub fn reversed(&self, degree_bound: usize) -> Option<Self> {
        if self.degree().map_or(false, |d| d > degree_bound) {
            return None;
        }
        let mut coeffs = vec![Int::zero(); degree_bound + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[degree_bound - k] = c.clone();
        }
        Some(Self::from_coeffs(coeffs))
    }

    /// Exact division: returns `r` with `q * r = self`.
    ///
    /// Errors with [`ExactError::DivisionByZero`] when `q` is zero and
    /// [`ExactError::NotDivisible`] when no such `r` exists over the integers.
    pub fn exact_div(&self, q: &Self) -> Result<Self, ExactError> {
        if q.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::default());
        }
        let dq = q.degree().expect("nonzero divisor");
        let lead_q = &q.coeffs[dq];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Int::zero(); self.coeffs.len().saturating_sub(dq)];
        while rem.len() > dq {
            let dr = rem.len() - 1;
            let lead_r = rem[dr].clone();
            if (&lead_r % lead_q) != Int::zero() {
                return Err(ExactError::NotDivisible);
            }
            let c = lead_r / lead_q;
            let shift = dr - dq;
            for (i, qc) in q.coeffs.iter().enumerate() {
                let delta = &c * qc;
                rem[shift + i] -= delta;
            }
            quot[shift] = c;
            while rem.last().map_or(false, Zero::is_zero) {
                rem.pop();
            }
            if rem.is_empty() {
                return Ok(Self::from_coeffs(quot));
            }
        }
        Err(ExactError::NotDivisible)
    }

    /// How many times `q` divides `self` exactly (`self` nonzero).
    pub fn multiplicity_of(&self, q: &Self) -> usize {
        let mut m = 0;
        let mut p = self.clone();
        while let Ok(next) = p.exact_div(q) {
            p = next;
            m += 1;
        }
        m
    }
}

impl Zero for UniPoly {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for UniPoly {
    fn one() -> Self {
        Self::from_i64(&[1])
    }
}

impl Add for UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: UniPoly) -> UniPoly {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (i, c) in short.into_iter().enumerate() {
            long[i] += c;
        }
        Self::from_coeffs(long)
    }
}

impl Sub for UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: UniPoly) -> UniPoly {
        self + (-rhs)
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::default();
        }
        let mut coeffs = vec![Int::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "x")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

// Debug shares the Display rendering so failed assertions stay readable.
impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Clears denominators in `p(num/den)`: computes
/// `den^clear_power * sum_i c_i * num^i * den^(clear_power - i)`.
///
/// Requires `clear_power >= deg p` so every term stays polynomial.
pub fn rational_substitute(
    p: &UniPoly,
    num: &UniPoly,
    den: &UniPoly,
    clear_power: usize,
) -> Result<UniPoly, ExactError> {
    let degree = p.degree().unwrap_or(0);
    if clear_power < degree {
        return Err(ExactError::PowerTooSmall {
            clear_power,
            degree,
        });
    }
    // num^i built up, den^(clear_power-i) taken from a precomputed table.
    let mut den_pows = Vec::with_capacity(clear_power + 1);
    den_pows.push(UniPoly::one());
    for _ in 0..clear_power {
        let last = den_pows.last().expect("nonempty").clone();
        den_pows.push(last * den.clone());
    }
    let mut acc = UniPoly::default();
    let mut num_pow = UniPoly::one();
    for (i, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            let term = num_pow.clone() * den_pows[clear_power - i].clone();
            acc = acc + term.mul_int(c);
        }
        num_pow = num_pow * num.clone();
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64(coeffs)
    }

    #[test]
    fn mul_binomial_square() {
        assert_eq!(p(&[1, 1]) * p(&[1, 1]), p(&[1, 2, 1]));
    }

    #[test]
    fn mul_reaches_doubled_updown_run_values() {
        // (1+x) * 2x = 2x + 2x^2, twice the n = 2 up-down run polynomial.
        assert_eq!(p(&[1, 1]) * p(&[0, 2]), p(&[0, 2, 2]));
    }

    #[test]
    fn mul_by_zero_annihilates() {
        assert_eq!(p(&[]) * p(&[1, 5]), UniPoly::zero());
    }

    #[test]
    fn exact_div_square() {
        assert_eq!(p(&[1, 2, 1]).exact_div(&p(&[1, 1])).unwrap(), p(&[1, 1]));
    }

    #[test]
    fn exact_div_quartic_by_square() {
        // x + 7x^2 + 11x^3 + 5x^4 over (1+x)^2; checked by multiplying back.
        let dividend = p(&[0, 1, 7, 11, 5]);
        let divisor = p(&[1, 1]) * p(&[1, 1]);
        let quot = dividend.exact_div(&divisor).unwrap();
        assert_eq!(quot, p(&[0, 1, 5]));
        assert_eq!(quot * divisor, dividend);
    }

    #[test]
    fn exact_div_detects_remainder() {
        assert_eq!(
            p(&[1, 0, 1]).exact_div(&p(&[1, 1])),
            Err(ExactError::NotDivisible)
        );
    }

    #[test]
    fn exact_div_by_zero() {
        assert_eq!(
            p(&[1]).exact_div(&UniPoly::zero()),
            Err(ExactError::DivisionByZero)
        );
    }

    #[test]
    fn non_monic_integral_quotient() {
        // (2x - 1)(3x + 4) has non-unit leading coefficients on both sides.
        let a = p(&[-1, 2]);
        let b = p(&[4, 3]);
        assert_eq!((a.clone() * b.clone()).exact_div(&b).unwrap(), a);
        // 2x / (2x - 1) is not integral.
        assert_eq!(p(&[0, 2]).exact_div(&a), Err(ExactError::NotDivisible));
    }

    #[test]
    fn multiplicity_counts_exact_factors() {
        let q = p(&[1, 1]);
        let poly = q.pow(3) * p(&[2, 0, 5]);
        assert_eq!(poly.multiplicity_of(&q), 3);
        assert_eq!(p(&[0, 1]).multiplicity_of(&q), 0);
    }

    #[test]
    fn rational_substitute_identity() {
        // (1+x) * (x / (1+x)) = x.
        let out = rational_substitute(&p(&[0, 1]), &p(&[0, 1]), &p(&[1, 1]), 1).unwrap();
        assert_eq!(out, p(&[0, 1]));
    }

    #[test]
    fn rational_substitute_constant() {
        let out = rational_substitute(&p(&[1]), &p(&[0, 7]), &p(&[3, 1]), 0).unwrap();
        assert_eq!(out, p(&[1]));
    }

    #[test]
    fn rational_substitute_power_too_small() {
        assert_eq!(
            rational_substitute(&p(&[0, 0, 1]), &p(&[0, 1]), &p(&[1, 1]), 1),
            Err(ExactError::PowerTooSmall {
                clear_power: 1,
                degree: 2
            })
        );
    }

    #[test]
    fn reversal_against_bound() {
        assert_eq!(p(&[0, 2, 4]).reversed(2).unwrap(), p(&[4, 2]));
        assert_eq!(p(&[1]).reversed(2).unwrap(), p(&[0, 0, 1]));
        assert!(p(&[1, 1, 1, 1]).reversed(2).is_none());
    }

    #[test]
    fn display_rendering() {
        assert_eq!(p(&[0, 2, 12, 10]).to_string(), "2x + 12x^2 + 10x^3");
        assert_eq!(p(&[1, -1]).to_string(), "1 - x");
        assert_eq!(p(&[-3]).to_string(), "-3");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }

    #[test]
    fn derivative_is_formal() {
        assert_eq!(p(&[5, 1, 3, 2]).derivative(), p(&[1, 6, 6]));
        assert_eq!(p(&[7]).derivative(), UniPoly::zero());
    }

    #[test]
    fn compose_and_negate() {
        let b2 = p(&[1, 6, 1]);
        assert_eq!(b2.compose_xpow(2), p(&[1, 0, 6, 0, 1]));
        assert_eq!(p(&[0, 1, 1, 1]).eval_neg_x(), p(&[0, -1, 1, -1]));
    }
}
