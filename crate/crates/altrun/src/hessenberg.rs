//! Lower Hessenberg matrices and their determinants, generic over the
//! crate's exact ring element types.

use std::fmt;

use num_traits::{One, Zero};

/// Ring element requirements for determinant evaluation.
///
/// Satisfied by `Int`, `UniPoly` and `LaurentPoly`; any commutative ring
/// with these operations works.
pub trait RingElem:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + std::ops::Neg<Output = Self>
    + std::ops::Sub<Output = Self>
{
}

impl<T> RingElem for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + std::ops::Neg<Output = Self>
        + std::ops::Sub<Output = Self>
{
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HessError {
    /// Row lengths disagree with the declared order.
    NotSquare { order: usize, row: usize, len: usize },
    /// A nonzero entry above the superdiagonal.
    NotHessenberg { row: usize, col: usize },
    /// Naive cofactor expansion refuses orders past its guard.
    OrderTooLarge { order: usize, max: usize },
}

impl fmt::Display for HessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HessError::NotSquare { order, row, len } => {
                write!(f, "row {row} has {len} entries in an order-{order} matrix")
            }
            HessError::NotHessenberg { row, col } => {
                write!(f, "nonzero entry above the superdiagonal at ({row}, {col})")
            }
            HessError::OrderTooLarge { order, max } => {
                write!(f, "naive expansion limited to order {max}, got {order}")
            }
        }
    }
}

impl std::error::Error for HessError {}

/// Square matrix with zero entries above the superdiagonal.
///
/// The shape invariant is checked at construction, so determinant routines
/// can rely on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HessMatrix<T> {
    order: usize,
    rows: Vec<Vec<T>>,
}

const NAIVE_MAX_ORDER: usize = 8;

impl<T: RingElem> HessMatrix<T> {
    pub fn new(rows: Vec<Vec<T>>) -> Result<Self, HessError> {
        let order = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(HessError::NotSquare {
                    order,
                    row: i,
                    len: row.len(),
                });
            }
            for (j, entry) in row.iter().enumerate() {
                if j > i + 1 && !entry.is_zero() {
                    return Err(HessError::NotHessenberg { row: i, col: j });
                }
            }
        }
        Ok(HessMatrix { order, rows })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    /// Entry at 0-indexed `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> &T {
        &self.rows[i][j]
    }

    /// All leading principal minors `det H_0 .. det H_order` in one pass.
    ///
    /// Uses the Hessenberg determinant recursion
    /// `det H_m = h_mm det H_(m-1) + sum_r (-1)^(m-r) h_mr (prod_j h_j,j+1) det H_(r-1)`
    /// with `det H_0 = 1`, costing O(order^2) ring multiplications total.
    pub fn leading_minors(&self) -> Vec<T> {
        let mut minors: Vec<T> = Vec::with_capacity(self.order + 1);
        minors.push(T::one());
        for m in 1..=self.order {
            // Diagonal term h_{m,m} * det H_{m-1} (1-indexed formulas).
            let mut acc = self.rows[m - 1][m - 1].clone() * minors[m - 1].clone();
            // Running superdiagonal product prod_{j=r}^{m-1} h_{j,j+1}.
            let mut prod = T::one();
            let mut negate = true;
            for r in (1..m).rev() {
                prod = prod * self.rows[r - 1][r].clone();
                let entry = &self.rows[m - 1][r - 1];
                if !entry.is_zero() {
                    let term = entry.clone() * prod.clone() * minors[r - 1].clone();
                    acc = if negate { acc - term } else { acc + term };
                }
                negate = !negate;
            }
            minors.push(acc);
        }
        minors
    }

    /// Determinant via the Hessenberg recursion.
    pub fn det_recursive(&self) -> T {
        self.leading_minors()
            .pop()
            .expect("minors always include det H_0")
    }

    /// Independent oracle: full Laplace expansion along the first row,
    /// ignoring the Hessenberg structure. Guarded to order 8.
    pub fn det_naive(&self) -> Result<T, HessError> {
        if self.order > NAIVE_MAX_ORDER {
            return Err(HessError::OrderTooLarge {
                order: self.order,
                max: NAIVE_MAX_ORDER,
            });
        }
        Ok(det_cofactor(&self.rows))
    }
}

fn det_cofactor<T: RingElem>(rows: &[Vec<T>]) -> T {
    let n = rows.len();
    if n == 0 {
        return T::one();
    }
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut acc = T::zero();
    for j in 0..n {
        if rows[0][j].is_zero() {
            continue;
        }
        let sub: Vec<Vec<T>> = rows[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = rows[0][j].clone() * det_cofactor(&sub);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{Int, LaurentPoly, UniPoly};

    fn up(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64(coeffs)
    }

    fn mat(rows: Vec<Vec<UniPoly>>) -> HessMatrix<UniPoly> {
        HessMatrix::new(rows).unwrap()
    }

    #[test]
    fn order_one() {
        let m = mat(vec![vec![up(&[3, 1])]]);
        assert_eq!(m.det_recursive(), up(&[3, 1]));
    }

    #[test]
    fn order_zero_is_one() {
        let m = HessMatrix::<Int>::new(vec![]).unwrap();
        assert_eq!(m.det_naive().unwrap(), Int::from(1));
        assert_eq!(m.det_recursive(), Int::from(1));
    }

    #[test]
    fn alternating_run_matrix_order_three() {
        // [[2x, -1, 0], [4x^2, 1, -1], [4x^2+8x^3, -1+x^2, 2]]
        let m = mat(vec![
            vec![up(&[0, 2]), up(&[-1]), up(&[])],
            vec![up(&[0, 0, 4]), up(&[1]), up(&[-1])],
            vec![up(&[0, 0, 4, 8]), up(&[-1, 0, 1]), up(&[2])],
        ]);
        let want = up(&[0, 2, 12, 10]);
        assert_eq!(m.det_recursive(), want);
        assert_eq!(m.det_naive().unwrap(), want);
    }

    #[test]
    fn integer_tridiagonal_derangement_block() {
        let m = HessMatrix::new(vec![
            vec![Int::from(2), Int::from(-1)],
            vec![Int::from(3), Int::from(3)],
        ])
        .unwrap();
        assert_eq!(m.det_recursive(), Int::from(9));
    }

    #[test]
    fn two_by_two_laurent_formula() {
        let l = LaurentPoly::letter;
        let m = HessMatrix::new(vec![
            vec![l("a"), l("b")],
            vec![l("c"), l("d")],
        ])
        .unwrap();
        let want = l("a") * l("d") - l("b") * l("c");
        assert_eq!(m.det_naive().unwrap(), want);
        assert_eq!(m.det_recursive(), want);
    }

    #[test]
    fn rejects_entries_above_superdiagonal() {
        let err = HessMatrix::new(vec![
            vec![Int::from(1), Int::from(2), Int::from(3)],
            vec![Int::from(1), Int::from(1), Int::from(1)],
            vec![Int::from(1), Int::from(1), Int::from(1)],
        ])
        .unwrap_err();
        assert_eq!(err, HessError::NotHessenberg { row: 0, col: 2 });
    }

    #[test]
    fn rejects_ragged_rows() {
        let err = HessMatrix::new(vec![vec![Int::from(1)], vec![]]).unwrap_err();
        assert!(matches!(err, HessError::NotSquare { .. }));
    }

    #[test]
    fn naive_guard() {
        let rows: Vec<Vec<Int>> = (0..9)
            .map(|i| (0..9).map(|j| if j > i + 1 { Int::from(0) } else { Int::from(1) }).collect())
            .collect();
        let m = HessMatrix::new(rows).unwrap();
        assert_eq!(
            m.det_naive().unwrap_err(),
            HessError::OrderTooLarge { order: 9, max: 8 }
        );
    }

    #[test]
    fn block_extension_preserves_determinant() {
        let base = vec![
            vec![up(&[0, 2]), up(&[-1]), up(&[])],
            vec![up(&[0, 0, 4]), up(&[1]), up(&[-1])],
            vec![up(&[0, 0, 4, 8]), up(&[-1, 0, 1]), up(&[2])],
        ];
        let original = mat(base.clone()).det_recursive();
        let mut extended = base;
        for row in &mut extended {
            row.push(up(&[]));
        }
        let mut last = vec![up(&[]); 3];
        last.push(up(&[1]));
        extended.push(last);
        assert_eq!(mat(extended).det_recursive(), original);
    }

    #[test]
    fn leading_minors_are_prefix_determinants() {
        let rows = vec![
            vec![up(&[0, 2]), up(&[-1]), up(&[])],
            vec![up(&[0, 0, 4]), up(&[1]), up(&[-1])],
            vec![up(&[0, 0, 4, 8]), up(&[-1, 0, 1]), up(&[2])],
        ];
        let minors = mat(rows.clone()).leading_minors();
        assert_eq!(minors[0], UniPoly::from_i64(&[1]));
        for m in 1..=3 {
            let prefix: Vec<Vec<UniPoly>> = rows[..m]
                .iter()
                .map(|row| row[..m].to_vec())
                .collect();
            assert_eq!(minors[m], mat(prefix).det_recursive(), "minor {m}");
        }
    }
}
