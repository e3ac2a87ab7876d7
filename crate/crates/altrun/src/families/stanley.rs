//! Explicit summation formulas evaluated in exact rational arithmetic.

use num_traits::{One, Zero};

use crate::exact::{binomial, factorial, stirling2, Int, Rat, UniPoly};

use super::FamilyError;

fn int_pow(base: i64, exp: usize) -> Int {
    let mut acc = Int::one();
    for _ in 0..exp {
        acc *= Int::from(base);
    }
    acc
}

/// Alternating-run count `R(n,k)` by the explicit double sum
///
/// `R(n,k) = sum_(i=0)^k 2^(1-i) (-1)^(k-i) z_(k-i)
///           sum_(r+2m <= i, r == i mod 2) (-2)^m C(i-m, (i+r)/2) C(n,m) r^n`
///
/// with `z_0 = 2` and `z_j = 4` for `j >= 1`, valid for `n >= 2`.
///
/// Index-range reading: the inner sum runs over all integers `r, m >= 0`
/// with `r + 2m <= i` and `r` of the same parity as `i`. Whether `r` is
/// allowed to start at 0 is immaterial here: every `r = 0` term carries
/// `0^n = 0` since `n >= 2`. This reading is pinned against the triangle
/// recurrence for all `2 <= n <= 8`, `0 <= k <= n-1` in the test suite.
pub fn stanley_run_count(n: usize, k: usize) -> Result<Int, FamilyError> {
    if n < 2 {
        return Err(FamilyError::UnsupportedOrder {
            what: "explicit alternating-run formula".to_owned(),
            n,
            min: 2,
        });
    }
    let mut acc = Rat::zero();
    for i in 0..=k {
        let mut inner = Int::zero();
        for m in 0..=(i / 2) {
            let mut r = i % 2;
            while r + 2 * m <= i {
                if r > 0 {
                    let mut term = binomial((i - m) as u64, ((i + r) / 2) as u64)
                        * binomial(n as u64, m as u64)
                        * int_pow(r as i64, n);
                    if m % 2 == 1 {
                        term = -term;
                    }
                    inner += term << m; // (-2)^m = sign * 2^m
                }
                r += 2;
            }
        }
        if inner.is_zero() {
            continue;
        }
        let z = if k == i { Int::from(2) } else { Int::from(4) };
        let mut numer = z * inner;
        if (k - i) % 2 == 1 {
            numer = -numer;
        }
        // 1/2^(i-1) is 2 at i = 0, else a halving.
        let frac = if i == 0 {
            Rat::from_integer(numer * Int::from(2))
        } else {
            Rat::new(numer, Int::one() << (i - 1))
        };
        acc += frac;
    }
    if !acc.is_integer() {
        return Err(FamilyError::NonIntegerResult { n, k });
    }
    Ok(acc.to_integer())
}

/// `R_n(x)` assembled from [`stanley_run_count`], `n >= 2`.
pub fn stanley_run_poly(n: usize) -> Result<UniPoly, FamilyError> {
    let coeffs: Result<Vec<Int>, FamilyError> =
        (0..n).map(|k| stanley_run_count(n, k)).collect();
    Ok(UniPoly::from_coeffs(coeffs?))
}

/// Type B Eulerian polynomial by the explicit Stirling-number formula
/// `B_n(x) = sum_(k=0)^n k! sum_(i=k)^n C(n,i) 2^i S(i,k) (x-1)^(n-k)`.
pub fn typeb_eulerian_explicit(n: usize) -> UniPoly {
    let x_minus_1 = UniPoly::from_i64(&[-1, 1]);
    let mut acc = UniPoly::zero();
    for k in 0..=n {
        let mut weight = Int::zero();
        for i in k..=n {
            weight += binomial(n as u64, i as u64)
                * (Int::one() << i)
                * stirling2(i as u64, k as u64).expect("k <= i");
        }
        weight *= factorial(k as u64);
        acc = acc + x_minus_1.pow(n - k).mul_int(&weight);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::recurrences::{triangle_entry, typeb_eulerian_seq, TriangleId};

    #[test]
    fn worked_coefficients() {
        assert_eq!(stanley_run_count(3, 2).unwrap(), Int::from(4));
        assert_eq!(stanley_run_count(4, 1).unwrap(), Int::from(2));
        assert_eq!(stanley_run_count(2, 0).unwrap(), Int::zero());
    }

    #[test]
    fn agrees_with_triangle_through_eight() {
        for n in 2..=8 {
            for k in 0..n {
                assert_eq!(
                    stanley_run_count(n, k).unwrap(),
                    triangle_entry(TriangleId::R, n, k),
                    "(n, k) = ({n}, {k})"
                );
            }
        }
    }

    #[test]
    fn rejects_small_n() {
        assert!(matches!(
            stanley_run_count(1, 0),
            Err(FamilyError::UnsupportedOrder { .. })
        ));
    }

    #[test]
    fn typeb_explicit_matches_recurrence() {
        let seq = typeb_eulerian_seq(8);
        for (n, want) in seq.iter().enumerate() {
            assert_eq!(&typeb_eulerian_explicit(n), want, "n = {n}");
        }
    }
}
