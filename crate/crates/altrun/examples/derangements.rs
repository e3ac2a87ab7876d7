//! Derangement numbers by determinant and by enumeration, plus the one
//! documented discrepancy: the tridiagonal layout as printed evaluates to
//! -d_n, so the verifier flags it instead of silently correcting it.
//!
//! ```text
//! cargo run --example derangements
//! ```

use altrun::enumerate::derangement_count;
use altrun::families::{build_matrix_uni, DetVariant};

fn main() {
    println!("{:>3} {:>10} {:>12} {:>12}", "n", "count", "banded det", "tridiag det");
    for n in 1..=9 {
        let count = derangement_count(n).unwrap();
        let banded = if n >= 3 {
            build_matrix_uni(DetVariant::Kit93, n - 2)
                .unwrap()
                .det_recursive()
                .coeff(0)
                .to_string()
        } else {
            "-".to_owned()
        };
        let tridiag = build_matrix_uni(DetVariant::QiTridiagonal, n)
            .unwrap()
            .det_recursive()
            .coeff(0);
        assert_eq!(tridiag, -count.clone());
        println!("{n:>3} {count:>10} {banded:>12} {tridiag:>12}");
    }
    println!("\nthe tridiagonal column is the negated sequence; `altrun verify` flags it");
}
