//! Euler numbers four ways: alternating-permutation counts, the
//! binomial recurrence, a Hessenberg determinant, and the bivariate tree
//! polynomials evaluated at (1, 1).
//!
//! ```text
//! cargo run --example euler_numbers
//! ```

use altrun::families::{family_uni, DetVariant, FamilyId, Method};

fn main() {
    println!("{:>3} {:>12} {:>12} {:>12} {:>12}", "n", "enumeration", "recurrence", "determinant", "trees(1,1)");
    for n in 1..=9 {
        let enumeration = family_uni(FamilyId::EulerNum, n, &Method::Enumeration)
            .unwrap()
            .coeff(0);
        let recurrence = family_uni(FamilyId::EulerNum, n, &Method::Recurrence)
            .unwrap()
            .coeff(0);
        let grammar = family_uni(FamilyId::EulerNum, n, &Method::Grammar)
            .unwrap()
            .coeff(0);
        let determinant = if n >= 2 {
            family_uni(
                FamilyId::EulerNum,
                n,
                &Method::Determinant(DetVariant::EulerNumCor),
            )
            .unwrap()
            .coeff(0)
            .to_string()
        } else {
            "-".to_owned()
        };
        assert_eq!(enumeration, recurrence);
        assert_eq!(enumeration, grammar);
        println!("{n:>3} {enumeration:>12} {recurrence:>12} {determinant:>12} {grammar:>12}");
    }
}
