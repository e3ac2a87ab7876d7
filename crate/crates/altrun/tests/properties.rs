//! Property-based tests for the exact arithmetic kernel, the grammar
//! engine and the determinant evaluators.

use num_traits::Zero;
use proptest::prelude::*;

use altrun::exact::{Int, LaurentPoly, Monomial, UniPoly};
use altrun::families::grammars::all_grammars;
use altrun::grammar::Grammar;
use altrun::hessenberg::HessMatrix;
use altrun::verify::leibniz_counterexample;

fn small_poly() -> impl Strategy<Value = UniPoly> {
    proptest::collection::vec(-9i64..=9, 0..=7).prop_map(|c| UniPoly::from_i64(&c))
}

fn nonzero_poly() -> impl Strategy<Value = UniPoly> {
    small_poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn small_laurent() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec(
        (
            proptest::collection::vec(-2i32..=3, 3),
            -9i64..=9,
        ),
        0..=4,
    )
    .prop_map(|terms| {
        let letters = ["a", "b", "c"];
        let mut p = LaurentPoly::zero();
        for (exps, coeff) in terms {
            let mut m = Monomial::unit();
            for (letter, e) in letters.iter().zip(exps) {
                m = m.combined(&Monomial::letter_pow(letter, e));
            }
            p.add_term(m, Int::from(coeff));
        }
        p
    })
}

proptest! {
    #[test]
    fn unipoly_add_commutes(a in small_poly(), b in small_poly()) {
        prop_assert_eq!(a.clone() + b.clone(), b + a);
    }

    #[test]
    fn unipoly_mul_commutes(a in small_poly(), b in small_poly()) {
        prop_assert_eq!(a.clone() * b.clone(), b * a);
    }

    #[test]
    fn unipoly_mul_associates(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a * (b * c));
    }

    #[test]
    fn unipoly_distributes(a in small_poly(), b in small_poly(), c in small_poly()) {
        let lhs = a.clone() * (b.clone() + c.clone());
        let rhs = a.clone() * b + a * c;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exact_div_inverts_multiplication(p in small_poly(), q in nonzero_poly()) {
        let product = p.clone() * q.clone();
        prop_assert_eq!(product.exact_div(&q).unwrap(), p);
    }

    #[test]
    fn laurent_mul_commutes(a in small_laurent(), b in small_laurent()) {
        prop_assert_eq!(a.clone() * b.clone(), b * a);
    }

    #[test]
    fn laurent_mul_associates(a in small_laurent(), b in small_laurent(), c in small_laurent()) {
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a * (b * c));
    }

    #[test]
    fn laurent_distributes(a in small_laurent(), b in small_laurent(), c in small_laurent()) {
        let lhs = a.clone() * (b.clone() + c.clone());
        let rhs = a.clone() * b + a * c;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn laurent_negation_cancels_to_empty_map(p in small_laurent()) {
        let sum = p.clone() + (-p);
        prop_assert!(sum.is_zero());
        prop_assert_eq!(sum.num_terms(), 0);
    }

    #[test]
    fn derivation_orders_compose(p in small_laurent(), m in 0usize..=3, n in 0usize..=3) {
        for (_, grammar) in all_grammars() {
            let direct = grammar.derive_n(&p, m + n);
            let staged = grammar.derive_n(&grammar.derive_n(&p, m), n);
            prop_assert_eq!(direct, staged);
        }
    }

    #[test]
    fn leibniz_rule_on_random_pairs(u in small_laurent(), v in small_laurent()) {
        for (name, grammar) in all_grammars() {
            prop_assert!(
                leibniz_counterexample(grammar, &u, &v, 3).is_none(),
                "grammar {}", name
            );
        }
    }

    #[test]
    fn hessenberg_recursion_matches_cofactor_oracle(
        order in 1usize..=4,
        seed in proptest::collection::vec(-5i64..=5, 16 * 3),
    ) {
        let mut it = seed.into_iter();
        let mut next_poly = || {
            let coeffs: Vec<i64> = (&mut it).take(3).collect();
            UniPoly::from_i64(&coeffs)
        };
        let rows: Vec<Vec<UniPoly>> = (0..order)
            .map(|i| {
                (0..order)
                    .map(|j| if j > i + 1 { UniPoly::zero() } else { next_poly() })
                    .collect()
            })
            .collect();
        let m = HessMatrix::new(rows).unwrap();
        prop_assert_eq!(m.det_recursive(), m.det_naive().unwrap());
    }

    #[test]
    fn equal_adjacent_rows_kill_the_determinant(
        order in 2usize..=5,
        dup in 0usize..=3,
        seed in proptest::collection::vec(-5i64..=5, 25 * 2),
    ) {
        let dup = dup.min(order - 2);
        let mut it = seed.into_iter();
        let mut next_poly = || {
            let coeffs: Vec<i64> = (&mut it).take(2).collect();
            UniPoly::from_i64(&coeffs)
        };
        // Row dup+1 duplicates row dup; both must respect row dup's zero
        // pattern, which is stricter, so the shape stays Hessenberg.
        let mut rows: Vec<Vec<UniPoly>> = Vec::new();
        for i in 0..order {
            let source = if i == dup + 1 { dup } else { i };
            let row: Vec<UniPoly> = (0..order)
                .map(|j| if j > source + 1 { UniPoly::zero() } else { next_poly() })
                .collect();
            rows.push(row);
        }
        rows[dup + 1] = rows[dup].clone();
        let m = HessMatrix::new(rows).unwrap();
        prop_assert!(m.det_recursive().is_zero());
        prop_assert!(m.det_naive().unwrap().is_zero());
    }

    #[test]
    fn grammar_unparse_is_a_fixed_point(rules in grammar_text()) {
        let g = match Grammar::parse(&rules) {
            Ok(g) => g,
            Err(_) => return Ok(()),
        };
        let rendered = g.unparse();
        let reparsed = Grammar::parse(&rendered).unwrap();
        prop_assert_eq!(&g, &reparsed);
        prop_assert_eq!(reparsed.unparse(), rendered);
    }
}

/// Random rule files over letters a, b, c with small integer coefficients.
fn grammar_text() -> impl Strategy<Value = String> {
    let atom = prop_oneof![
        Just("a".to_owned()),
        Just("b".to_owned()),
        Just("c".to_owned()),
        (0u32..=9).prop_map(|v| v.to_string()),
    ];
    let factor = (atom, proptest::option::of(1u32..=3)).prop_map(|(a, e)| match e {
        Some(e) => format!("{a}^{e}"),
        None => a,
    });
    let term = proptest::collection::vec(factor, 1..=3).prop_map(|fs| fs.join("*"));
    let expr = proptest::collection::vec(term, 1..=3).prop_map(|ts| ts.join(" + "));
    proptest::collection::vec(expr, 3).prop_map(|exprs| {
        format!("a -> {}\nb -> {}\nc -> {}\n", exprs[0], exprs[1], exprs[2])
    })
}
