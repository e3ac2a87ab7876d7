//! Recurrence-based constructors: the baseline route for every family.

use num_traits::{One, Zero};

use crate::exact::{binomial, Int, UniPoly};

use super::entries::entry_a;

fn up(coeffs: &[i64]) -> UniPoly {
    UniPoly::from_i64(coeffs)
}

/// Eulerian polynomials `A_0..A_max` by the determinant-derived recurrence
/// `A_(n+1) = (1 + nx) A_n + x sum_(r=2)^n C(n, r-2) (1-x)^(n-r+1) A_(r-1)`
/// with `A_1 = x`. Index 0 holds the conventional constant 1.
pub fn eulerian_seq(max: usize) -> Vec<UniPoly> {
    let mut seq = vec![UniPoly::one()];
    if max == 0 {
        return seq;
    }
    seq.push(UniPoly::x());
    let one_minus_x = up(&[1, -1]);
    for n in 1..max {
        // (1 + nx) A_n
        let mut next = up(&[1, n as i64]) * seq[n].clone();
        let mut weight = UniPoly::x(); // x (1-x)^(n-r+1) walking r downward from n
        for r in (2..=n).rev() {
            weight = weight.clone() * one_minus_x.clone();
            // accumulate weight only; binomials differ per r
            let term = seq[r - 1].clone() * weight.clone();
            next = next + term.mul_int(&binomial(n as u64, r as u64 - 2));
        }
        seq.push(next);
    }
    seq
}

/// One step of `p -> pre * p + mult * p'`, the shared shape of the
/// differential recurrences.
fn diff_step(p: &UniPoly, pre: UniPoly, mult: UniPoly) -> UniPoly {
    pre * p.clone() + mult * p.derivative()
}

/// Alternating run polynomials `R_0..R_max`:
/// `R_(n+2) = x(nx+2) R_(n+1) + x(1-x^2) R'_(n+1)`, `R_0 = R_1 = 1`.
pub fn run_seq(max: usize) -> Vec<UniPoly> {
    let mut seq = vec![UniPoly::one()];
    if max == 0 {
        return seq;
    }
    seq.push(UniPoly::one());
    for n in 0..max - 1 {
        let next = diff_step(&seq[n + 1], up(&[0, 2, n as i64]), up(&[0, 1, 0, -1]));
        seq.push(next);
    }
    seq
}

/// Up-down run polynomials `S_0..S_max`:
/// `S_(n+1) = x(nx+1) S_n + x(1-x^2) S'_n`, `S_0 = 1`.
pub fn updown_seq(max: usize) -> Vec<UniPoly> {
    let mut seq = vec![UniPoly::one()];
    for n in 0..max {
        let next = diff_step(&seq[n], up(&[0, 1, n as i64]), up(&[0, 1, 0, -1]));
        seq.push(next);
    }
    seq
}

/// Type B alternating run polynomials `T_1..T_max` (index 0 holds the
/// conventional constant 1 and is not exposed as a family value):
/// `T_(n+1) = (2nx^2 + 3x - 1) T_n + 2x(1-x^2) T'_n`, `T_1 = x`.
pub fn typeb_run_seq(max: usize) -> Vec<UniPoly> {
    let mut seq = vec![UniPoly::one()];
    if max == 0 {
        return seq;
    }
    seq.push(UniPoly::x());
    for n in 1..max {
        let next = diff_step(&seq[n], up(&[-1, 3, 2 * n as i64]), up(&[0, 2, 0, -2]));
        seq.push(next);
    }
    seq
}

/// Type B Eulerian polynomials `B_0..B_max`:
/// `B_(n+1) = (2nx + 1 + x) B_n + 2x(1-x) B'_n`, `B_0 = 1`.
pub fn typeb_eulerian_seq(max: usize) -> Vec<UniPoly> {
    let mut seq = vec![UniPoly::one()];
    for n in 0..max {
        let next = diff_step(&seq[n], up(&[1, 2 * n as i64 + 1]), up(&[0, 2, -2]));
        seq.push(next);
    }
    seq
}

/// Dual-Stirling run polynomials `F_0..F_max`:
/// `F_(n+1) = (x + 2nx^2) F_n + x(1-x^2) F'_n`, `F_0 = 1`.
pub fn dual_run_seq(max: usize) -> Vec<UniPoly> {
    let mut seq = vec![UniPoly::one()];
    for n in 0..max {
        let next = diff_step(&seq[n], up(&[0, 1, 2 * n as i64]), up(&[0, 1, 0, -1]));
        seq.push(next);
    }
    seq
}

/// Euler numbers `E_0..E_max` from the determinant-derived recurrence
/// `E_(n+1) = sum_(r=1)^n C(n, r-1) a_(n-r+1) E_r` with `E_1 = 1`
/// (`E_0 = 1` by convention).
pub fn euler_number_seq(max: usize) -> Vec<Int> {
    let mut seq = vec![Int::one()];
    if max == 0 {
        return seq;
    }
    seq.push(Int::one());
    for n in 1..max {
        let mut next = Int::zero();
        for r in 1..=n {
            let a = entry_a(n - r + 1);
            if !a.is_zero() {
                next += binomial(n as u64, r as u64 - 1) * a * &seq[r];
            }
        }
        seq.push(next);
    }
    seq
}

// ---------------------------------------------------------------------------
// Coefficient triangles
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangleId {
    /// Alternating run counts `R(n,k)`, `k = 0..n-1`.
    R,
    /// Type B (up signed) run counts `T(n,k)`, `k = 0..n`.
    T,
}

/// Rows `1..=n_max` of the triangle, row `n` indexed by `k` from 0.
pub fn triangle_rows(id: TriangleId, n_max: usize) -> Vec<Vec<Int>> {
    let mut rows: Vec<Vec<Int>> = Vec::with_capacity(n_max);
    if n_max == 0 {
        return rows;
    }
    match id {
        TriangleId::R => rows.push(vec![Int::one()]),
        TriangleId::T => rows.push(vec![Int::zero(), Int::one()]),
    }
    let get = |row: &Vec<Int>, k: i64| -> Int {
        if k < 0 || k as usize >= row.len() {
            Int::zero()
        } else {
            row[k as usize].clone()
        }
    };
    for n in 2..=n_max {
        let prev = rows.last().expect("at least one row");
        let (width, row) = match id {
            TriangleId::R => {
                // R(n,k) = k R(n-1,k) + 2 R(n-1,k-1) + (n-k) R(n-1,k-2); R(n,0) = 0.
                let width = n; // k = 0..n-1
                let mut row = vec![Int::zero(); width];
                for (k, slot) in row.iter_mut().enumerate().skip(1) {
                    let k_i = k as i64;
                    *slot = Int::from(k_i) * get(prev, k_i)
                        + Int::from(2) * get(prev, k_i - 1)
                        + Int::from(n as i64 - k_i) * get(prev, k_i - 2);
                }
                (width, row)
            }
            TriangleId::T => {
                // T(n,k) = (2k-1) T(n-1,k) + 3 T(n-1,k-1) + (2n-2k+2) T(n-1,k-2).
                let width = n + 1; // k = 0..n
                let mut row = vec![Int::zero(); width];
                for (k, slot) in row.iter_mut().enumerate().skip(1) {
                    let k_i = k as i64;
                    *slot = Int::from(2 * k_i - 1) * get(prev, k_i)
                        + Int::from(3) * get(prev, k_i - 1)
                        + Int::from(2 * n as i64 - 2 * k_i + 2) * get(prev, k_i - 2);
                }
                (width, row)
            }
        };
        debug_assert_eq!(row.len(), width);
        rows.push(row);
    }
    rows
}

/// Single triangle value by the memoized recurrence; out-of-range `k` is 0.
pub fn triangle_entry(id: TriangleId, n: usize, k: usize) -> Int {
    assert!(n >= 1, "triangle rows start at n = 1");
    let rows = triangle_rows(id, n);
    rows[n - 1].get(k).cloned().unwrap_or_else(Int::zero)
}

/// The polynomial assembled from triangle row `n`.
pub fn triangle_poly(id: TriangleId, n: usize) -> UniPoly {
    UniPoly::from_coeffs(triangle_rows(id, n)[n - 1].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eulerian_low_orders() {
        let a = eulerian_seq(4);
        assert_eq!(a[1], up(&[0, 1]));
        assert_eq!(a[2], up(&[0, 1, 1]));
        assert_eq!(a[3], up(&[0, 1, 4, 1]));
        assert_eq!(a[4], up(&[0, 1, 11, 11, 1]));
    }

    #[test]
    fn diff_recurrence_reaches_published_lists() {
        let r = run_seq(4);
        assert_eq!(r[2], up(&[0, 2]));
        assert_eq!(r[3], up(&[0, 2, 4]));
        assert_eq!(r[4], up(&[0, 2, 12, 10]));
        let s = updown_seq(4);
        assert_eq!(s[1], up(&[0, 1]));
        assert_eq!(s[4], up(&[0, 1, 7, 11, 5]));
        let t = typeb_run_seq(4);
        assert_eq!(t[2], up(&[0, 1, 3]));
        assert_eq!(t[3], up(&[0, 1, 12, 11]));
        assert_eq!(t[4], up(&[0, 1, 39, 95, 57]));
        let b = typeb_eulerian_seq(2);
        assert_eq!(b[0], up(&[1]));
        assert_eq!(b[1], up(&[1, 1]));
        assert_eq!(b[2], up(&[1, 6, 1]));
        let f = dual_run_seq(4);
        assert_eq!(f[1], up(&[0, 1]));
        assert_eq!(f[2], up(&[0, 1, 1, 1]));
        assert_eq!(f[3], up(&[0, 1, 3, 7, 3, 1]));
        assert_eq!(f[4], up(&[0, 1, 7, 29, 31, 29, 7, 1]));
    }

    #[test]
    fn euler_numbers_low_orders() {
        let e = euler_number_seq(9);
        let want: Vec<Int> = [1i64, 1, 1, 2, 5, 16, 61, 272, 1385, 7936]
            .iter()
            .map(|&v| Int::from(v))
            .collect();
        assert_eq!(e, want);
    }

    #[test]
    fn triangle_boundaries() {
        assert_eq!(triangle_entry(TriangleId::R, 1, 0), Int::one());
        assert_eq!(triangle_entry(TriangleId::R, 1, 3), Int::zero());
        assert_eq!(triangle_entry(TriangleId::R, 4, 3), Int::from(10));
        assert_eq!(triangle_entry(TriangleId::T, 1, 2), Int::zero());
        assert_eq!(triangle_entry(TriangleId::T, 1, 1), Int::one());
        assert_eq!(triangle_entry(TriangleId::T, 3, 2), Int::from(12));
    }

    #[test]
    fn triangle_polys_match_diff_recurrences() {
        for n in 1..=12 {
            assert_eq!(triangle_poly(TriangleId::R, n), run_seq(n)[n], "R at {n}");
            assert_eq!(triangle_poly(TriangleId::T, n), typeb_run_seq(n)[n], "T at {n}");
        }
    }
}
