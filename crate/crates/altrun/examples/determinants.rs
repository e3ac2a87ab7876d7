//! Hessenberg determinant representations: print a theorem matrix, take
//! its determinant, and read a whole family prefix off the leading
//! principal minors of one large instance.
//!
//! ```text
//! cargo run --example determinants
//! ```

use altrun::families::{build_matrix_uni, recurrences, DetVariant};

fn main() {
    // The order-3 matrix whose determinant is R_4(x) = 2x + 12x^2 + 10x^3.
    let m = build_matrix_uni(DetVariant::SrThmBR, 3).unwrap();
    println!("alternating-run matrix at parameter 3:");
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        println!("  [ {} ]", cells.join(" | "));
    }
    println!("  det = {}\n", m.det_recursive());

    // The matrices are nested, so one pass over the order-12 instance
    // yields R_2 .. R_13 as leading principal minors.
    let big = build_matrix_uni(DetVariant::SrThmBR, 12).unwrap();
    let minors = big.leading_minors();
    let reference = recurrences::run_seq(13);
    println!("leading minors of the order-12 instance:");
    for (order, minor) in minors.iter().enumerate().skip(1) {
        let n = order + 1;
        assert_eq!(minor, &reference[n], "minor {order}");
        println!("  order {order:2} -> R_{n} = {minor}");
    }
}
