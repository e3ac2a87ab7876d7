//! Builders for every printed determinant representation.
//!
//! All matrices are lower Hessenberg and nested: the order-k leading
//! principal minor of a larger instance is the order-k instance, so one
//! `leading_minors` pass yields a whole family prefix.

use num_traits::{One, Zero};

use crate::exact::{binomial, Int, LaurentPoly, UniPoly};
use crate::hessenberg::{HessMatrix, RingElem};

use super::entries::{
    entry_a, entry_e, entry_f_ff, entry_f_sr, entry_r, entry_s, entry_t, entry_t_first_column,
};
use super::recurrences::{
    dual_run_seq, eulerian_seq, run_seq, typeb_eulerian_seq, updown_seq,
};
use super::{DetVariant, FamilyError, FamilyId};

fn up(coeffs: &[i64]) -> UniPoly {
    UniPoly::from_i64(coeffs)
}

/// Assembles an order-n matrix from a 1-indexed entry function, zeroing
/// everything above the superdiagonal.
fn assemble<T: RingElem>(order: usize, entry: impl Fn(usize, usize) -> T) -> HessMatrix<T> {
    let rows = (1..=order)
        .map(|i| {
            (1..=order)
                .map(|j| if j > i + 1 { T::zero() } else { entry(i, j) })
                .collect()
        })
        .collect();
    HessMatrix::new(rows).expect("builders respect the Hessenberg shape")
}

fn c(n: usize, k: usize) -> Int {
    binomial(n as u64, k as u64)
}

/// Either concrete matrix type a variant can produce.
#[derive(Clone, Debug, PartialEq)]
pub enum BuiltMatrix {
    Uni(HessMatrix<UniPoly>),
    Biv(HessMatrix<LaurentPoly>),
}

impl BuiltMatrix {
    pub fn order(&self) -> usize {
        match self {
            BuiltMatrix::Uni(m) => m.order(),
            BuiltMatrix::Biv(m) => m.order(),
        }
    }
}

fn order_error(variant: DetVariant, n: usize, min: usize) -> FamilyError {
    FamilyError::UnsupportedOrder {
        what: format!("matrix variant {}", variant.name()),
        n,
        min,
    }
}

/// Builds the matrix a theorem prints for parameter `n`, exactly as printed.
///
/// Self-referential first columns (values of the same or another family)
/// are filled from the recurrence route, never from a determinant, so the
/// determinant identities remain genuine cross-checks.
pub fn build_matrix(variant: DetVariant, n: usize) -> Result<BuiltMatrix, FamilyError> {
    if n < variant.min_param() {
        return Err(order_error(variant, n, variant.min_param()));
    }
    let m = match variant {
        DetVariant::AndreThm => {
            // Index 0 is never read; entries start at e_1.
            let entries: Vec<LaurentPoly> = std::iter::once(LaurentPoly::zero())
                .chain((1..=n).map(entry_e))
                .collect();
            let x = LaurentPoly::letter("x");
            return Ok(BuiltMatrix::Biv(assemble(n, |i, j| {
                if j == i + 1 {
                    -LaurentPoly::one()
                } else if j == 1 {
                    x.clone() * entries[i].clone()
                } else {
                    entries[i - j + 1].mul_int(&c(i, j - 1))
                }
            })));
        }
        DetVariant::EulerianThm => {
            // Order n+1 for A_(n+1); first column holds A_1..A_n.
            let a = eulerian_seq(n);
            let one_minus_x = up(&[1, -1]);
            assemble(n + 1, |i, j| {
                if j == i + 1 {
                    up(&[-1])
                } else if i == 1 {
                    up(&[0, 1])
                } else if j == 1 {
                    a[i - 1].clone()
                } else {
                    (up(&[0, 1]) * one_minus_x.pow(i - j)).mul_int(&c(i - 1, j - 2))
                }
            })
        }
        DetVariant::EulerNumCor => assemble(n, |i, j| {
            if j == i + 1 {
                up(&[-1])
            } else if j == 1 {
                UniPoly::constant(entry_a(i))
            } else {
                UniPoly::constant(entry_a(i - j + 1) * c(i, j - 1))
            }
        }),
        DetVariant::SrThmAS => assemble(n, |i, j| {
            if j == i + 1 {
                up(&[-1])
            } else if j == 1 {
                up(&[0, 1]) * entry_s(i)
            } else {
                entry_s(i - j + 1).mul_int(&c(i, j - 1))
            }
        }),
        DetVariant::SrThmAR => assemble(n + 1, |i, j| {
            if j == i + 1 {
                up(&[-1])
            } else if i == 1 {
                up(&[1])
            } else if j == 1 {
                entry_r(i - 1)
            } else {
                entry_s(i - j + 1).mul_int(&c(i - 1, j - 2))
            }
        }),
        DetVariant::SrThmBS => {
            let s = updown_seq(n);
            assemble(n + 1, |i, j| {
                if j == i + 1 {
                    up(&[-1])
                } else if i == 1 {
                    up(&[0, 1])
                } else if j == 1 {
                    up(&[0, 1]) * s[i - 1].clone()
                } else {
                    entry_f_sr(i - j + 1).mul_int(&c(i - 1, j - 2))
                }
            })
        }
        DetVariant::SrThmBR => {
            let r = run_seq(n);
            assemble(n, |i, j| {
                if j == i + 1 {
                    up(&[-1])
                } else if j == 1 {
                    up(&[0, 2]) * r[i].clone()
                } else {
                    entry_f_sr(i - j + 1).mul_int(&c(i - 1, j - 2))
                }
            })
        }
        DetVariant::TThm => assemble(n, |i, j| {
            if j == i + 1 {
                up(&[-1])
            } else if j == 1 {
                entry_t_first_column(i)
            } else {
                entry_t(i - j + 1).mul_int(&c(i, j - 1))
            }
        }),
        DetVariant::TTsThm => {
            let s = updown_seq(n);
            assemble(n + 1, |i, j| {
                if j == i + 1 {
                    up(&[-1])
                } else if i == 1 {
                    up(&[0, 1])
                } else if j == 1 {
                    let two_pow = Int::one() << (i - 1);
                    (up(&[0, 1]) * s[i - 1].clone()).mul_int(&two_pow)
                } else {
                    entry_t(i - j + 1).mul_int(&c(i - 1, j - 2))
                }
            })
        }
        DetVariant::FBtThm => {
            let b = typeb_eulerian_seq(n);
            let f = dual_run_seq(n);
            // The top-left pivot is x: the order-1 leading minor must be
            // F_1 for the nested-minor structure (and the companion
            // recurrence) to hold.
            assemble(n + 1, |i, j| {
                if j == i + 1 {
                    up(&[-1])
                } else if i == 1 {
                    up(&[0, 1])
                } else if j == 1 {
                    up(&[0, 1]) * b[i - 1].compose_xpow(2)
                } else {
                    -f[i - j + 1].eval_neg_x().mul_int(&c(i - 1, j - 2))
                }
            })
        }
        DetVariant::FFfThm => {
            let f = dual_run_seq(n);
            assemble(n + 1, |i, j| {
                if j == i + 1 {
                    up(&[-1])
                } else if i == 1 {
                    up(&[0, 1])
                } else if j == 1 {
                    up(&[0, 1]) * f[i - 1].clone()
                } else {
                    entry_f_ff(i - j + 1).mul_int(&c(i - 1, j - 2))
                }
            })
        }
        DetVariant::Kit93 => assemble(n, |i, j| {
            if j == i + 1 {
                up(&[-1])
            } else if j == i || j + 1 == i {
                UniPoly::constant(Int::from(i as i64 + 1))
            } else {
                UniPoly::zero()
            }
        }),
        DetVariant::QiTridiagonal => assemble(n + 1, |i, j| {
            if j == i + 1 {
                up(&[1])
            } else if j == i {
                UniPoly::constant(Int::from(i as i64 - 2))
            } else if j + 1 == i {
                UniPoly::constant(Int::from(2 - i as i64))
            } else {
                UniPoly::zero()
            }
        }),
    };
    Ok(BuiltMatrix::Uni(m))
}

/// The univariate matrix for a variant, or an error for the bivariate one.
pub fn build_matrix_uni(variant: DetVariant, n: usize) -> Result<HessMatrix<UniPoly>, FamilyError> {
    match build_matrix(variant, n)? {
        BuiltMatrix::Uni(m) => Ok(m),
        BuiltMatrix::Biv(_) => Err(FamilyError::BivariateValue {
            context: format!("variant {} is bivariate", variant.name()),
        }),
    }
}

pub fn build_matrix_andre(n: usize) -> Result<HessMatrix<LaurentPoly>, FamilyError> {
    match build_matrix(DetVariant::AndreThm, n)? {
        BuiltMatrix::Biv(m) => Ok(m),
        BuiltMatrix::Uni(_) => unreachable!("AndreThm always builds bivariate"),
    }
}

impl DetVariant {
    /// Smallest parameter the theorem states the matrix for.
    pub fn min_param(self) -> usize {
        match self {
            DetVariant::EulerianThm | DetVariant::SrThmBS | DetVariant::FFfThm => 0,
            DetVariant::AndreThm
            | DetVariant::EulerNumCor
            | DetVariant::SrThmAS
            | DetVariant::SrThmAR
            | DetVariant::SrThmBR
            | DetVariant::TThm
            | DetVariant::TTsThm
            | DetVariant::FBtThm
            | DetVariant::Kit93
            | DetVariant::QiTridiagonal => 1,
        }
    }

    /// Order of the matrix built for parameter `n`.
    pub fn order_for(self, n: usize) -> usize {
        match self {
            DetVariant::EulerianThm
            | DetVariant::SrThmAR
            | DetVariant::SrThmBS
            | DetVariant::TTsThm
            | DetVariant::FBtThm
            | DetVariant::FFfThm
            | DetVariant::QiTridiagonal => n + 1,
            DetVariant::AndreThm
            | DetVariant::EulerNumCor
            | DetVariant::SrThmAS
            | DetVariant::SrThmBR
            | DetVariant::TThm
            | DetVariant::Kit93 => n,
        }
    }

    /// Which family the determinant evaluates, and at which index, for
    /// parameter `n`. The Qi tridiagonal matrix is compared against the
    /// derangement numbers but does not reproduce them (see `verify`).
    pub fn family_index(self, n: usize) -> (FamilyId, usize) {
        match self {
            DetVariant::EulerianThm => (FamilyId::A, n + 1),
            DetVariant::AndreThm => (FamilyId::Andre, n + 1),
            DetVariant::EulerNumCor => (FamilyId::EulerNum, n + 1),
            DetVariant::SrThmAS | DetVariant::SrThmBS => (FamilyId::S, n + 1),
            DetVariant::SrThmAR | DetVariant::SrThmBR => (FamilyId::R, n + 1),
            DetVariant::TThm => (FamilyId::T, n),
            DetVariant::TTsThm => (FamilyId::T, n + 1),
            DetVariant::FBtThm | DetVariant::FFfThm => (FamilyId::F, n + 1),
            DetVariant::Kit93 => (FamilyId::D, n + 2),
            DetVariant::QiTridiagonal => (FamilyId::D, n),
        }
    }

    /// Inverse of [`DetVariant::family_index`]: the parameter whose matrix
    /// evaluates the family at index `n`, when the theorem covers it.
    pub fn param_for_index(self, n: usize) -> Option<usize> {
        let param = match self {
            DetVariant::EulerianThm
            | DetVariant::AndreThm
            | DetVariant::EulerNumCor
            | DetVariant::SrThmAS
            | DetVariant::SrThmAR
            | DetVariant::SrThmBS
            | DetVariant::SrThmBR
            | DetVariant::TTsThm
            | DetVariant::FBtThm
            | DetVariant::FFfThm => n.checked_sub(1)?,
            DetVariant::TThm | DetVariant::QiTridiagonal => n,
            DetVariant::Kit93 => n.checked_sub(2)?,
        };
        (param >= self.min_param()).then_some(param)
    }
}
