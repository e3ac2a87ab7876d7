//! Closed-form entry generators for the determinant representations.
//!
//! Each function produces the `n`-th entry of one matrix family; the
//! formulas alternate with the parity of `n` and involve powers of
//! `1 - x^2` (or `x^2 - 1`, or `2x - y^2` in the bivariate case).

use num_traits::One;

use crate::exact::{Int, LaurentPoly, Monomial, UniPoly};

fn up(coeffs: &[i64]) -> UniPoly {
    UniPoly::from_i64(coeffs)
}

/// `(1 - x^2)^k`.
fn one_minus_x2_pow(k: usize) -> UniPoly {
    up(&[1, 0, -1]).pow(k)
}

fn sign(negative: bool, p: UniPoly) -> UniPoly {
    if negative {
        -p
    } else {
        p
    }
}

/// `s_n = (-1)^(n+1) (1+x) (1-x^2)^floor((n-1)/2)`, n >= 1.
pub fn entry_s(n: usize) -> UniPoly {
    sign(n % 2 == 0, up(&[1, 1]) * one_minus_x2_pow((n - 1) / 2))
}

/// `r_n = (-1)^(n-1) (x-1) (1-x^2)^floor((n-1)/2)`, n >= 1.
pub fn entry_r(n: usize) -> UniPoly {
    sign(n % 2 == 0, up(&[-1, 1]) * one_minus_x2_pow((n - 1) / 2))
}

/// `f_n = (-1)^(n+1) (1-x^2)^floor(n/2)`, n >= 1 (the up-down-run dual form).
pub fn entry_f_sr(n: usize) -> UniPoly {
    sign(n % 2 == 0, one_minus_x2_pow(n / 2))
}

/// `t_n`: `(1+x)(1-x^2)^(k-1)` for `n = 2k-1`, `-(1-x^2)^k` for `n = 2k`.
pub fn entry_t(n: usize) -> UniPoly {
    if n % 2 == 1 {
        up(&[1, 1]) * one_minus_x2_pow((n + 1) / 2 - 1)
    } else {
        -one_minus_x2_pow(n / 2)
    }
}

/// First-column entry `x t_n / (1+x)`, which is polynomial:
/// `x (1-x^2)^(k-1)` for `n = 2k-1` and `-x (1-x) (1-x^2)^(k-1)` for `n = 2k`.
pub fn entry_t_first_column(n: usize) -> UniPoly {
    if n % 2 == 1 {
        up(&[0, 1]) * one_minus_x2_pow((n + 1) / 2 - 1)
    } else {
        -(up(&[0, 1, -1]) * one_minus_x2_pow(n / 2 - 1))
    }
}

/// Dual-Stirling entry: `(1+x^2)(x^2-1)^(2k-2)` for `n = 2k-1`,
/// `-(x^2-1)^(2k)` for `n = 2k`.
pub fn entry_f_ff(n: usize) -> UniPoly {
    let x2m1 = up(&[-1, 0, 1]);
    if n % 2 == 1 {
        up(&[1, 0, 1]) * x2m1.pow(n - 1)
    } else {
        -x2m1.pow(2 * (n / 2))
    }
}

/// Euler-number entry: `a_(2t-1) = (-1)^(t-1)`, `a_(2t) = 0`.
pub fn entry_a(n: usize) -> Int {
    if n % 2 == 0 {
        Int::from(0)
    } else if ((n + 1) / 2) % 2 == 1 {
        Int::from(1)
    } else {
        Int::from(-1)
    }
}

/// Bivariate entry `e_n(x,y)`: `(-1)^(k-1) y (2x-y^2)^(k-1)` for `n = 2k-1`,
/// `(-1)^(k-1) (x-y^2) (2x-y^2)^(k-1)` for `n = 2k`.
pub fn entry_e(n: usize) -> LaurentPoly {
    let x = LaurentPoly::letter("x");
    let y = LaurentPoly::letter("y");
    let core = x.mul_int(&Int::from(2)) - y.clone() * y.clone();
    let k = (n + 1) / 2;
    let lead = if n % 2 == 1 {
        y.clone()
    } else {
        x - y.clone() * y
    };
    let mut out = lead * core.pow((k - 1) as u32);
    if k % 2 == 0 {
        out = -out;
    }
    out
}

/// Convenience: the unit `x` as a one-term Laurent polynomial.
pub fn laurent_x() -> LaurentPoly {
    LaurentPoly::from_monomial(Monomial::letter("x"), Int::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_order_entries() {
        assert_eq!(entry_s(1), up(&[1, 1]));
        assert_eq!(entry_s(2), up(&[-1, -1]));
        assert_eq!(entry_r(1), up(&[-1, 1]));
        assert_eq!(entry_r(2), up(&[1, -1]));
        assert_eq!(entry_f_sr(1), up(&[1]));
        assert_eq!(entry_f_sr(2), up(&[-1, 0, 1]));
        assert_eq!(entry_t(1), up(&[1, 1]));
        assert_eq!(entry_t(2), up(&[-1, 0, 1]));
        assert_eq!(entry_t(3), up(&[1, 1]) * up(&[1, 0, -1]));
        assert_eq!(entry_f_ff(1), up(&[1, 0, 1]));
        assert_eq!(entry_f_ff(2), -up(&[-1, 0, 1]).pow(2));
    }

    #[test]
    fn first_column_t_entries_clear_the_denominator() {
        for n in 1..=9 {
            let direct = entry_t_first_column(n);
            let via_division = (entry_t(n) * up(&[0, 1])).exact_div(&up(&[1, 1])).unwrap();
            assert_eq!(direct, via_division, "n = {n}");
        }
    }

    #[test]
    fn euler_number_entries_alternate() {
        let got: Vec<Int> = (1..=8).map(entry_a).collect();
        let want: Vec<Int> = [1, 0, -1, 0, 1, 0, -1, 0].iter().map(|&v| Int::from(v)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn bivariate_entries() {
        let x = LaurentPoly::letter("x");
        let y = LaurentPoly::letter("y");
        assert_eq!(entry_e(1), y.clone());
        assert_eq!(entry_e(2), x.clone() - y.clone() * y.clone());
        let core = x.mul_int(&Int::from(2)) - y.clone() * y.clone();
        assert_eq!(entry_e(3), -(y * core));
    }
}
