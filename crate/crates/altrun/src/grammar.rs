//! Context-free grammar formal-derivative engine.
//!
//! A grammar is a set of substitution rules `letter -> polynomial`. Its
//! formal derivative `D` is the unique derivation extending the rules by
//! linearity and the product rule; letters without a rule derive to zero.
//! Negative exponents follow the quotient-rule convention
//! `D(l^-k) = -k l^(-k-1) D(l)`, which is what makes derivatives of
//! expressions like `1/(ab)` well defined.
//!
//! Rule files are plain text, one rule per line:
//!
//! ```text
//! # letters without a rule act as constants
//! letters: q
//! a -> a*(b+c)
//! b -> 2*b*c
//! c -> 2*b^2
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::exact::{Int, LaurentPoly, UniPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GrammarError {
    Syntax { line: usize, col: usize, message: String },
    DuplicateRule { letter: String },
    /// A right-hand-side letter that is neither a rule head nor declared
    /// in a `letters:` header.
    UnknownLetter { letter: String, line: usize },
}

impl fmt::Display for GrammarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrammarError::Syntax { line, col, message } => {
                write!(f, "syntax error at line {line}, column {col}: {message}")
            }
            GrammarError::DuplicateRule { letter } => {
                write!(f, "duplicate rule for letter '{letter}'")
            }
            GrammarError::UnknownLetter { letter, line } => {
                write!(f, "unknown letter '{letter}' on line {line}")
            }
        }
    }
}

impl std::error::Error for GrammarError {}

/// Substitution rules over an ordered letter set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grammar {
    letters: Vec<String>,
    rules: BTreeMap<String, LaurentPoly>,
}

impl Grammar {
    /// Parses the rule-file format described at module level.
    ///
    /// `#` starts a comment, blank lines are skipped, an optional
    /// `letters: a b c` header declares parameter letters (derivative zero),
    /// and each remaining line is `letter -> expression` with `+`, `-`, `*`,
    /// `^` (nonnegative integer exponents), parentheses, nonnegative integer
    /// literals and letters.
    pub fn parse(text: &str) -> Result<Grammar, GrammarError> {
        let mut letters: Vec<String> = Vec::new();
        let mut pending: Vec<(String, LaurentPoly, usize)> = Vec::new();
        let mut seen_heads: BTreeMap<String, ()> = BTreeMap::new();

        let declare = |letters: &mut Vec<String>, name: &str| {
            if !letters.iter().any(|l| l == name) {
                letters.push(name.to_owned());
            }
        };

        for (idx, raw_line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw_line.find('#') {
                Some(pos) => &raw_line[..pos],
                None => raw_line,
            };
            if line.trim().is_empty() {
                continue;
            }
            if let Some(rest) = line.trim_start().strip_prefix("letters:") {
                for name in rest.split_whitespace() {
                    if !is_identifier(name) {
                        return Err(GrammarError::Syntax {
                            line: line_no,
                            col: 1,
                            message: format!("invalid letter name '{name}'"),
                        });
                    }
                    declare(&mut letters, name);
                }
                continue;
            }
            let arrow = line.find("->").ok_or_else(|| GrammarError::Syntax {
                line: line_no,
                col: 1,
                message: "expected 'letter -> expression'".to_owned(),
            })?;
            let head = line[..arrow].trim();
            if !is_identifier(head) {
                return Err(GrammarError::Syntax {
                    line: line_no,
                    col: 1,
                    message: format!("rule head '{head}' is not a letter"),
                });
            }
            if seen_heads.insert(head.to_owned(), ()).is_some() {
                return Err(GrammarError::DuplicateRule {
                    letter: head.to_owned(),
                });
            }
            declare(&mut letters, head);
            let rhs_col = arrow + 2;
            let rhs = parse_expression(&line[rhs_col..], line_no, rhs_col + 1)?;
            pending.push((head.to_owned(), rhs, line_no));
        }

        // Second pass: every right-hand-side letter must be introduced
        // somewhere (as a rule head or via a letters: header).
        let mut rules = BTreeMap::new();
        for (head, rhs, line_no) in pending {
            for name in rhs.letters_used() {
                if !letters.iter().any(|l| *l == name) {
                    return Err(GrammarError::UnknownLetter {
                        letter: name,
                        line: line_no,
                    });
                }
            }
            rules.insert(head, rhs);
        }
        Ok(Grammar { letters, rules })
    }

    /// Canonical rule-file rendering; reparsing it reproduces the grammar.
    pub fn unparse(&self) -> String {
        let mut out = String::new();
        let params: Vec<&str> = self
            .letters
            .iter()
            .filter(|l| !self.rules.contains_key(*l))
            .map(String::as_str)
            .collect();
        if !params.is_empty() {
            out.push_str("letters: ");
            out.push_str(&params.join(" "));
            out.push('\n');
        }
        for letter in &self.letters {
            if let Some(rhs) = self.rules.get(letter) {
                out.push_str(&format!("{letter} -> {}\n", render_rule(rhs)));
            }
        }
        out
    }

    /// Letter set in declaration order.
    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    /// The substitution rule for `letter`, if one was given.
    pub fn rule(&self, letter: &str) -> Option<&LaurentPoly> {
        self.rules.get(letter)
    }

    /// The formal derivative `D(p)`.
    pub fn derive(&self, p: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (mono, coeff) in p.terms() {
            for (letter, exp) in mono.letters() {
                let Some(rule) = self.rules.get(letter) else {
                    continue;
                };
                if rule.is_zero() {
                    continue;
                }
                // d/dl of l^e is e * l^(e-1), for negative e as well.
                let lowered = mono.shifted(letter, -1);
                let factor = LaurentPoly::from_monomial(lowered, coeff * Int::from(exp));
                out = out + factor * rule.clone();
            }
        }
        out
    }

    /// `n`-fold iterate of [`Grammar::derive`]; `n = 0` returns `p` unchanged.
    pub fn derive_n(&self, p: &LaurentPoly, n: usize) -> LaurentPoly {
        let mut acc = p.clone();
        for _ in 0..n {
            acc = self.derive(&acc);
        }
        acc
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Renders a rule right-hand side in re-parseable form (`2*b*c + a^2`).
fn render_rule(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_owned();
    }
    let mut out = String::new();
    let mut first = true;
    for (mono, coeff) in p.terms() {
        let mag = coeff.abs();
        if first {
            if coeff.is_negative() {
                out.push('-');
            }
            first = false;
        } else if coeff.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mut factors: Vec<String> = Vec::new();
        if !mag.is_one() || mono.is_unit() {
            factors.push(mag.to_string());
        }
        for (name, exp) in mono.letters() {
            if exp == 1 {
                factors.push(name.to_owned());
            } else {
                factors.push(format!("{name}^{exp}"));
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

// ---------------------------------------------------------------------------
// Expression parser
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Number(Int),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

struct Tokens {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
}

impl Tokens {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn next(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn col(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|&(_, c)| c)
            .unwrap_or(self.end_col)
    }

    fn error(&self, message: impl Into<String>) -> GrammarError {
        GrammarError::Syntax {
            line: self.line,
            col: self.col(),
            message: message.into(),
        }
    }
}

fn tokenize(text: &str, line: usize, col_offset: usize) -> Result<Tokens, GrammarError> {
    let mut toks = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col_offset + i;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                toks.push((Tok::Plus, col));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, col));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, col));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, col));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, col));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, col));
                i += 1;
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let value = digits.parse::<Int>().expect("digits parse");
                toks.push((Tok::Number(value), col));
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
            }
            _ => {
                return Err(GrammarError::Syntax {
                    line,
                    col,
                    message: format!("unexpected character '{c}'"),
                })
            }
        }
    }
    Ok(Tokens {
        toks,
        pos: 0,
        line,
        end_col: col_offset + chars.len(),
    })
}

fn parse_expression(text: &str, line: usize, col_offset: usize) -> Result<LaurentPoly, GrammarError> {
    let mut toks = tokenize(text, line, col_offset)?;
    let expr = parse_sum(&mut toks)?;
    if toks.peek().is_some() {
        return Err(toks.error("trailing input after expression"));
    }
    Ok(expr)
}

fn parse_sum(toks: &mut Tokens) -> Result<LaurentPoly, GrammarError> {
    let mut negate_head = false;
    if toks.peek() == Some(&Tok::Minus) {
        toks.next();
        negate_head = true;
    }
    let mut acc = parse_product(toks)?;
    if negate_head {
        acc = -acc;
    }
    while let Some(op) = toks.peek() {
        match op {
            Tok::Plus => {
                toks.next();
                acc = acc + parse_product(toks)?;
            }
            Tok::Minus => {
                toks.next();
                acc = acc - parse_product(toks)?;
            }
            _ => break,
        }
    }
    Ok(acc)
}

fn parse_product(toks: &mut Tokens) -> Result<LaurentPoly, GrammarError> {
    let mut acc = parse_power(toks)?;
    while toks.peek() == Some(&Tok::Star) {
        toks.next();
        acc = acc * parse_power(toks)?;
    }
    Ok(acc)
}

fn parse_power(toks: &mut Tokens) -> Result<LaurentPoly, GrammarError> {
    let base = parse_atom(toks)?;
    if toks.peek() != Some(&Tok::Caret) {
        return Ok(base);
    }
    toks.next();
    match toks.next() {
        Some((Tok::Number(n), _)) => {
            let exp = u32::try_from(&n).map_err(|_| toks.error("exponent too large"))?;
            Ok(base.pow(exp))
        }
        _ => Err(toks.error("expected a nonnegative integer exponent after '^'")),
    }
}

fn parse_atom(toks: &mut Tokens) -> Result<LaurentPoly, GrammarError> {
    match toks.next() {
        Some((Tok::Ident(name), _)) => Ok(LaurentPoly::letter(&name)),
        Some((Tok::Number(n), _)) => Ok(LaurentPoly::constant(n)),
        Some((Tok::LParen, _)) => {
            let inner = parse_sum(toks)?;
            match toks.next() {
                Some((Tok::RParen, _)) => Ok(inner),
                _ => Err(toks.error("expected ')'")),
            }
        }
        _ => Err(toks.error("expected a letter, number or '('")),
    }
}

// ---------------------------------------------------------------------------
// Specialization to univariate polynomials
// ---------------------------------------------------------------------------

/// What a letter becomes under specialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Binding {
    Const(Int),
    /// The distinguished output variable; several letters may share it,
    /// in which case their exponents add.
    Var,
}

/// Total assignment of letters for [`specialize`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    map: BTreeMap<String, Binding>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn constant(mut self, letter: &str, value: i64) -> Self {
        self.map.insert(letter.to_owned(), Binding::Const(Int::from(value)));
        self
    }

    pub fn variable(mut self, letter: &str) -> Self {
        self.map.insert(letter.to_owned(), Binding::Var);
        self
    }

    pub fn get(&self, letter: &str) -> Option<&Binding> {
        self.map.get(letter)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecializeError {
    UnassignedLetter { letter: String },
    /// A letter bound to zero occurs with a negative exponent.
    NegativePowerAtZero { letter: String },
    /// A letter bound to a non-unit constant occurs with a negative
    /// exponent; the result would leave the integers.
    NonUnitNegativePower { letter: String },
    /// The variable letters combine to a negative net power of `x`.
    NegativeOutputPower { power: i64 },
}

impl fmt::Display for SpecializeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecializeError::UnassignedLetter { letter } => {
                write!(f, "letter '{letter}' has no assignment")
            }
            SpecializeError::NegativePowerAtZero { letter } => {
                write!(f, "letter '{letter}' is 0 but occurs with negative exponent")
            }
            SpecializeError::NonUnitNegativePower { letter } => {
                write!(f, "letter '{letter}' needs an integer inverse it does not have")
            }
            SpecializeError::NegativeOutputPower { power } => {
                write!(f, "specialization produced x^{power}")
            }
        }
    }
}

impl std::error::Error for SpecializeError {}

/// Substitutes constants for letters and reads the designated letters'
/// exponents off as powers of the output variable.
pub fn specialize(p: &LaurentPoly, asg: &Assignment) -> Result<UniPoly, SpecializeError> {
    let mut out = UniPoly::zero();
    'term: for (mono, coeff) in p.terms() {
        let mut acc = coeff.clone();
        let mut xpow: i64 = 0;
        for (letter, exp) in mono.letters() {
            match asg.get(letter) {
                None => {
                    return Err(SpecializeError::UnassignedLetter {
                        letter: letter.to_owned(),
                    })
                }
                Some(Binding::Var) => xpow += i64::from(exp),
                Some(Binding::Const(c)) => {
                    if c.is_zero() {
                        if exp < 0 {
                            return Err(SpecializeError::NegativePowerAtZero {
                                letter: letter.to_owned(),
                            });
                        }
                        continue 'term;
                    }
                    let mag = exp.unsigned_abs();
                    if exp < 0 && !c.abs().is_one() {
                        return Err(SpecializeError::NonUnitNegativePower {
                            letter: letter.to_owned(),
                        });
                    }
                    // For |c| = 1 the inverse equals c itself, so the same
                    // power works for either sign of the exponent.
                    for _ in 0..mag {
                        acc *= c;
                    }
                }
            }
        }
        if xpow < 0 {
            return Err(SpecializeError::NegativeOutputPower { power: xpow });
        }
        out = out + UniPoly::monomial(acc, xpow as usize);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Monomial;

    fn l(name: &str) -> LaurentPoly {
        LaurentPoly::letter(name)
    }

    #[test]
    fn parses_eulerian_rules() {
        let g = Grammar::parse("a -> a*b\nb -> a*b").unwrap();
        assert_eq!(g.letters(), ["a".to_owned(), "b".to_owned()]);
        let ab = l("a") * l("b");
        assert_eq!(g.rule("a"), Some(&ab));
        assert_eq!(g.rule("b"), Some(&ab));
    }

    #[test]
    fn parses_parenthesized_rules() {
        let g = Grammar::parse("a -> a*(b+c)\nb -> 2*b*c\nc -> 2*b^2").unwrap();
        assert_eq!(g.rule("a"), Some(&(l("a") * (l("b") + l("c")))));
        assert_eq!(g.rule("c"), Some(&l("b").pow(2).mul_int(&Int::from(2))));
    }

    #[test]
    fn syntax_error_has_position() {
        let err = Grammar::parse("a -> -> b").unwrap_err();
        match err {
            GrammarError::Syntax { line, col, .. } => {
                assert_eq!(line, 1);
                assert!(col >= 6, "column {col}");
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_rule_rejected() {
        let err = Grammar::parse("a -> b\nb -> a\na -> a").unwrap_err();
        assert_eq!(err, GrammarError::DuplicateRule { letter: "a".into() });
    }

    #[test]
    fn unknown_letter_rejected() {
        let err = Grammar::parse("a -> a*q").unwrap_err();
        assert_eq!(err, GrammarError::UnknownLetter { letter: "q".into(), line: 1 });
    }

    #[test]
    fn letters_header_declares_constants() {
        let g = Grammar::parse("letters: q\na -> q*a").unwrap();
        assert_eq!(g.letters(), ["q".to_owned(), "a".to_owned()]);
        assert_eq!(g.rule("q"), None);
        // q has no rule, so it derives to zero and acts as a constant.
        let d = g.derive(&l("a"));
        assert_eq!(d, l("q") * l("a"));
        let d2 = g.derive(&d);
        assert_eq!(d2, l("q").pow(2) * l("a"));
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = Grammar::parse("# Eulerian rules\n\na -> a*b  # head\nb -> a*b\n").unwrap();
        assert_eq!(g.rules.len(), 2);
    }

    #[test]
    fn derive_product_rule() {
        let g = Grammar::parse("a -> a*b\nb -> a*b").unwrap();
        let got = g.derive(&(l("a") * l("b")));
        let want = l("a") * l("b").pow(2) + l("a").pow(2) * l("b");
        assert_eq!(got, want);
    }

    #[test]
    fn derive_negative_exponent() {
        let g = Grammar::parse("a -> a*(b+c)\nb -> 2*b*c\nc -> 2*b^2").unwrap();
        let got = g.derive(&LaurentPoly::letter_pow("a", -1));
        let want = -(l("b") + l("c")) * LaurentPoly::letter_pow("a", -1);
        assert_eq!(got, want);
    }

    #[test]
    fn derive_constant_is_zero() {
        let g = Grammar::parse("a -> a*b\nb -> a*b").unwrap();
        assert!(g.derive(&LaurentPoly::constant(Int::from(5))).is_zero());
    }

    #[test]
    fn second_derivative_factored_form() {
        let g = Grammar::parse("a -> a*(b+c)\nb -> 2*b*c\nc -> 2*b^2").unwrap();
        let got = g.derive_n(&l("a"), 2);
        let want = l("a") * (l("b") + l("c")) * (l("c") + l("b").mul_int(&Int::from(3)));
        assert_eq!(got, want);
    }

    #[test]
    fn third_derivative_factored_form() {
        let g = Grammar::parse("a -> a*(b+c)\nb -> 2*b*c\nc -> 2*b^2").unwrap();
        let got = g.derive_n(&l("a"), 3);
        let quad = l("c").pow(2)
            + (l("b") * l("c")).mul_int(&Int::from(12))
            + l("b").pow(2).mul_int(&Int::from(11));
        let want = l("a") * (l("b") + l("c")) * quad;
        assert_eq!(got, want);
    }

    #[test]
    fn derive_n_zero_is_identity() {
        let g = Grammar::parse("a -> a*b\nb -> a*b").unwrap();
        let p = l("a").pow(2) + l("b");
        assert_eq!(g.derive_n(&p, 0), p);
    }

    #[test]
    fn specialize_two_letters_to_x() {
        // a(b+c)(c+3b) at a=b=x, c=1 gives x + 4x^2 + 3x^3.
        let p = l("a")
            * (l("b") + l("c"))
            * (l("c") + l("b").mul_int(&Int::from(3)));
        let asg = Assignment::new().variable("a").variable("b").constant("c", 1);
        assert_eq!(specialize(&p, &asg).unwrap(), UniPoly::from_i64(&[0, 1, 4, 3]));
    }

    #[test]
    fn specialize_eulerian_readout() {
        let p = l("a") * l("b").pow(2) + l("a").pow(2) * l("b");
        let asg = Assignment::new().constant("a", 1).variable("b");
        assert_eq!(specialize(&p, &asg).unwrap(), UniPoly::from_i64(&[0, 1, 1]));
    }

    #[test]
    fn specialize_constant_poly() {
        let p = LaurentPoly::one();
        assert_eq!(specialize(&p, &Assignment::new()).unwrap(), UniPoly::from_i64(&[1]));
    }

    #[test]
    fn specialize_errors() {
        let p = LaurentPoly::letter_pow("a", -1);
        let zero = Assignment::new().constant("a", 0);
        assert_eq!(
            specialize(&p, &zero),
            Err(SpecializeError::NegativePowerAtZero { letter: "a".into() })
        );
        assert_eq!(
            specialize(&l("a"), &Assignment::new()),
            Err(SpecializeError::UnassignedLetter { letter: "a".into() })
        );
        let var = Assignment::new().variable("a");
        assert_eq!(
            specialize(&p, &var),
            Err(SpecializeError::NegativeOutputPower { power: -1 })
        );
        let two = Assignment::new().constant("a", 2);
        assert_eq!(
            specialize(&p, &two),
            Err(SpecializeError::NonUnitNegativePower { letter: "a".into() })
        );
        // Minus-one inverts cleanly.
        let minus = Assignment::new().constant("a", -1);
        assert_eq!(specialize(&p, &minus).unwrap(), UniPoly::from_i64(&[-1]));
    }

    #[test]
    fn unparse_roundtrip_is_fixed_point() {
        for text in [
            "a -> a*b\nb -> a*b",
            "a -> a*(b+c)\nb -> 2*b*c\nc -> 2*b^2",
            "letters: q\na -> 3*q^2*a - b\nb -> b",
            "x -> x*y\ny -> x",
        ] {
            let g = Grammar::parse(text).unwrap();
            let round = Grammar::parse(&g.unparse()).unwrap();
            assert_eq!(g, round, "unparse of {text:?} was {:?}", g.unparse());
            assert_eq!(round.unparse(), g.unparse());
        }
    }

    #[test]
    fn monomial_unit_display() {
        assert_eq!(Monomial::unit().to_string(), "1");
    }
}
