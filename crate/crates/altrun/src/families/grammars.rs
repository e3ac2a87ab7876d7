//! The built-in grammars and the read-outs turning iterated formal
//! derivatives into family polynomials.

use std::sync::OnceLock;

use num_traits::One;

use crate::exact::{Int, LaurentPoly, UniPoly};
use crate::grammar::{specialize, Assignment, Grammar};

use super::{FamilyError, FamilyId};

fn builtin(cell: &'static OnceLock<Grammar>, rules: &str) -> &'static Grammar {
    cell.get_or_init(|| Grammar::parse(rules).expect("built-in grammar parses"))
}

/// `a -> ab, b -> ab`: iterated derivatives of `a` carry the Eulerian
/// polynomials.
pub fn eulerian_grammar() -> &'static Grammar {
    static G: OnceLock<Grammar> = OnceLock::new();
    builtin(&G, "a -> a*b\nb -> a*b")
}

/// `a -> ab, b -> bc, c -> b^2`: derivatives of `a` carry the up-down run
/// polynomials and derivatives of `a^2` the alternating run polynomials.
pub fn run_grammar() -> &'static Grammar {
    static G: OnceLock<Grammar> = OnceLock::new();
    builtin(&G, "a -> a*b\nb -> b*c\nc -> b^2")
}

/// `a -> a(b+c), b -> 2bc, c -> 2b^2`: derivatives of `a` carry
/// `(1+x) T_n(x)` after specialization.
pub fn typeb_run_grammar() -> &'static Grammar {
    static G: OnceLock<Grammar> = OnceLock::new();
    builtin(&G, "a -> a*(b+c)\nb -> 2*b*c\nc -> 2*b^2")
}

/// `x -> xy, y -> x`: derivatives of `y` are the bivariate leaf/unary
/// polynomials of 0-1-2 increasing trees. The letters are opaque names;
/// read-outs decide which one becomes the output variable.
pub fn increasing_tree_grammar() -> &'static Grammar {
    static G: OnceLock<Grammar> = OnceLock::new();
    builtin(&G, "x -> x*y\ny -> x")
}

/// `a -> abc, b -> bc^2, c -> b^2c`: derivatives of `bc` carry the type B
/// Eulerian polynomials and derivatives of `a` the dual-Stirling run
/// polynomials.
pub fn stirling_grammar() -> &'static Grammar {
    static G: OnceLock<Grammar> = OnceLock::new();
    builtin(&G, "a -> a*b*c\nb -> b*c^2\nc -> b^2*c")
}

/// Every built-in grammar, for property suites.
pub fn all_grammars() -> [(&'static str, &'static Grammar); 5] {
    [
        ("eulerian", eulerian_grammar()),
        ("run", run_grammar()),
        ("typeb_run", typeb_run_grammar()),
        ("increasing_tree", increasing_tree_grammar()),
        ("stirling", stirling_grammar()),
    ]
}

fn abc_to_x() -> Assignment {
    Assignment::new().constant("a", 1).variable("b").constant("c", 1)
}

/// `A_n(x)` from the Eulerian grammar, `n >= 0` internally.
pub fn eulerian_via_grammar(n: usize) -> UniPoly {
    let g = eulerian_grammar();
    let d = g.derive_n(&LaurentPoly::letter("a"), n);
    let asg = Assignment::new().constant("a", 1).variable("b");
    specialize(&d, &asg).expect("total assignment")
}

/// `S_n(x)`: specialize the n-th derivative of `a` at `a = c = 1, b = x`.
pub fn updown_via_grammar(n: usize) -> UniPoly {
    let g = run_grammar();
    let d = g.derive_n(&LaurentPoly::letter("a"), n);
    specialize(&d, &abc_to_x()).expect("total assignment")
}

/// `R_n(x)`: the (n-1)-st derivative of `a^2` carries `R_n`; `R_0 = 1`.
pub fn run_via_grammar(n: usize) -> UniPoly {
    if n == 0 {
        return UniPoly::one();
    }
    let g = run_grammar();
    let a2 = LaurentPoly::letter("a").pow(2);
    let d = g.derive_n(&a2, n - 1);
    specialize(&d, &abc_to_x()).expect("total assignment")
}

/// `T_n(x)`: the n-th derivative of `a` specializes to `(1+x) T_n(x)` at
/// `a = b = x, c = 1`; the `(1+x)` factor is divided out exactly and its
/// absence is a hard error.
pub fn typeb_run_via_grammar(n: usize) -> Result<UniPoly, FamilyError> {
    if n == 0 {
        return Err(FamilyError::UnsupportedOrder {
            what: "type B run grammar read-out".to_owned(),
            n,
            min: 1,
        });
    }
    let g = typeb_run_grammar();
    let d = g.derive_n(&LaurentPoly::letter("a"), n);
    let asg = Assignment::new().variable("a").variable("b").constant("c", 1);
    let image = specialize(&d, &asg).expect("total assignment");
    image
        .exact_div(&UniPoly::from_i64(&[1, 1]))
        .map_err(|_| FamilyError::ExactDivisionFailed {
            family: FamilyId::T,
            n,
        })
}

/// Bivariate `E_n(x,y)` as the n-th derivative of the leaf letter.
pub fn andre_via_grammar(n: usize) -> LaurentPoly {
    let g = increasing_tree_grammar();
    g.derive_n(&LaurentPoly::letter("y"), n)
}

/// `E_n(x,1)` as a univariate polynomial in the leaf letter.
pub fn andre_leaf_poly(n: usize) -> UniPoly {
    let asg = Assignment::new().variable("x").constant("y", 1);
    specialize(&andre_via_grammar(n), &asg).expect("total assignment")
}

/// Euler number `E_n` as the full evaluation `E_n(1,1)`.
pub fn euler_number_via_grammar(n: usize) -> Int {
    let asg = Assignment::new().constant("x", 1).constant("y", 1);
    let value = specialize(&andre_via_grammar(n), &asg).expect("total assignment");
    value.coeff(0)
}

/// `B_n(x)` from the derivative of `bc`: the image is
/// `sum_k B(n,k) b^(2k+1) c^(2n+1-2k)`, read off by exponent pattern.
pub fn typeb_eulerian_via_grammar(n: usize) -> Result<UniPoly, FamilyError> {
    let g = stirling_grammar();
    let bc = LaurentPoly::letter("b") * LaurentPoly::letter("c");
    let d = g.derive_n(&bc, n);
    let mut coeffs = vec![Int::from(0); n + 1];
    for (mono, coeff) in d.terms() {
        let be = mono.exponent("b");
        let ce = mono.exponent("c");
        let expected_ce = 2 * (n as i32) + 1 - (be - 1);
        if mono.exponent("a") != 0 || be < 1 || be % 2 == 0 || ce != expected_ce {
            return Err(FamilyError::ReadoutMismatch {
                context: format!("derivative of bc produced the monomial {mono}"),
            });
        }
        let k = ((be - 1) / 2) as usize;
        coeffs[k] = coeff.clone();
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

/// `F_n(x)` from the n-th derivative of `a` at `a = c = 1, b = x`.
pub fn dual_run_via_grammar(n: usize) -> UniPoly {
    let g = stirling_grammar();
    let d = g.derive_n(&LaurentPoly::letter("a"), n);
    specialize(&d, &abc_to_x()).expect("total assignment")
}
