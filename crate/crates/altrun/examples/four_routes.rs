//! One family, every route: the type B alternating run polynomials
//! computed by triangle recurrence, differential recurrence, grammar
//! derivative, two different determinants and brute-force enumeration.
//!
//! ```text
//! cargo run --example four_routes
//! ```

use altrun::families::{family_uni, DetVariant, FamilyId, Method};

fn main() {
    let routes = [
        Method::Triangle,
        Method::DiffRecurrence,
        Method::Grammar,
        Method::Determinant(DetVariant::TThm),
        Method::Determinant(DetVariant::TTsThm),
        Method::Enumeration,
    ];
    for n in 1..=6 {
        println!("T_{n}(x)");
        let mut values = Vec::new();
        for method in &routes {
            match family_uni(FamilyId::T, n, method) {
                Ok(p) => {
                    println!("  {:28} {p}", method.name());
                    values.push(p);
                }
                Err(e) => println!("  {:28} ({e})", method.name()),
            }
        }
        assert!(values.windows(2).all(|w| w[0] == w[1]), "routes disagree");
        println!();
    }
}
