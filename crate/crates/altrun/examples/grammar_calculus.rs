//! The grammar calculus: parse substitution rules from text, iterate the
//! formal derivative, and specialize letters to read off polynomials.
//!
//! ```text
//! cargo run --example grammar_calculus
//! ```

use altrun::exact::LaurentPoly;
use altrun::grammar::{specialize, Assignment, Grammar};

const RULES: &str = "\
# Substitution rules whose iterated derivative of `a` carries the
# type B alternating run polynomials after specialization.
a -> a*(b+c)
b -> 2*b*c
c -> 2*b^2
";

fn main() {
    let grammar = Grammar::parse(RULES).unwrap();
    println!("rules:\n{}", grammar.unparse());

    let a = LaurentPoly::letter("a");
    for n in 0..=4 {
        println!("D^{n}(a) = {}", grammar.derive_n(&a, n));
    }

    // Specializing a = b = x, c = 1 turns D^n(a) into (1+x) T_n(x).
    println!();
    let asg = Assignment::new().variable("a").variable("b").constant("c", 1);
    for n in 1..=5 {
        let image = specialize(&grammar.derive_n(&a, n), &asg).unwrap();
        let t = image
            .exact_div(&altrun::UniPoly::from_i64(&[1, 1]))
            .expect("the image always carries a (1+x) factor");
        println!("n = {n}: image = {image}");
        println!("       T_{n}  = {t}");
    }

    // Negative exponents follow the quotient rule, which is what makes
    // derivative closed forms like D(1/a) = -(b+c)/a come out exactly.
    println!();
    let inv_a = LaurentPoly::letter_pow("a", -1);
    for n in 1..=3 {
        println!("D^{n}(a^-1) = {}", grammar.derive_n(&inv_a, n));
    }
}
