//! Sparse multivariate Laurent polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Int;

/// A power product of named letters with signed integer exponents.
///
/// Zero exponents are never stored, so the map is a canonical key: two
/// monomials are equal iff their exponent maps are identical. The empty
/// map is the unit monomial.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(BTreeMap<String, i32>);

impl Monomial {
    /// The empty power product.
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn letter(name: &str) -> Self {
        Self::letter_pow(name, 1)
    }

    pub fn letter_pow(name: &str, exp: i32) -> Self {
        let mut m = Self::default();
        m.set(name, exp);
        m
    }

    fn set(&mut self, name: &str, exp: i32) {
        if exp == 0 {
            self.0.remove(name);
        } else {
            self.0.insert(name.to_owned(), exp);
        }
    }

    pub fn exponent(&self, name: &str) -> i32 {
        self.0.get(name).copied().unwrap_or(0)
    }

    /// Letters with nonzero exponent, in name order.
    pub fn letters(&self) -> impl Iterator<Item = (&str, i32)> {
        self.0.iter().map(|(k, &v)| (k.as_str(), v))
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    /// Pointwise exponent sum (monomial product).
    pub fn combined(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (name, &e) in &other.0 {
            let total = out.exponent(name) + e;
            out.set(name, total);
        }
        out
    }

    /// Same monomial with `name`'s exponent shifted by `delta`.
    pub fn shifted(&self, name: &str, delta: i32) -> Self {
        let mut out = self.clone();
        let total = out.exponent(name) + delta;
        out.set(name, total);
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, exp) in self.letters() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{name}")?;
            if exp != 1 {
                write!(f, "^{exp}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Multivariate Laurent polynomial: a finite map from monomials to nonzero
/// integer coefficients.
///
/// No zero coefficient is ever stored, so structural equality is polynomial
/// equality. Exponents may be negative; the letter universe is implicit in
/// the monomials themselves.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, Int>,
}

impl LaurentPoly {
    pub fn constant(c: Int) -> Self {
        let mut p = Self::default();
        p.add_term(Monomial::unit(), c);
        p
    }

    pub fn letter(name: &str) -> Self {
        Self::from_monomial(Monomial::letter(name), Int::one())
    }

    pub fn letter_pow(name: &str, exp: i32) -> Self {
        Self::from_monomial(Monomial::letter_pow(name, exp), Int::one())
    }

    pub fn from_monomial(m: Monomial, c: Int) -> Self {
        let mut p = Self::default();
        p.add_term(m, c);
        p
    }

    /// Adds `c * m`, pruning the entry when the coefficient cancels to zero.
    pub fn add_term(&mut self, m: Monomial, c: Int) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms in monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Int)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of the unit monomial if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Int> {
        if self.terms.is_empty() {
            return Some(Int::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().expect("len checked");
            if m.is_unit() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn coefficient(&self, m: &Monomial) -> Int {
        self.terms.get(m).cloned().unwrap_or_else(Int::zero)
    }

    pub fn mul_int(&self, c: &Int) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc * self.clone();
        }
        acc
    }

    /// All letters that occur with nonzero exponent, in name order.
    pub fn letters_used(&self) -> Vec<String> {
        let mut set = std::collections::BTreeSet::new();
        for m in self.terms.keys() {
            for (name, _) in m.letters() {
                set.insert(name.to_owned());
            }
        }
        set.into_iter().collect()
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        Self::constant(Int::one())
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        self + (-rhs)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.combined(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_unit() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letter(name: &str) -> LaurentPoly {
        LaurentPoly::letter(name)
    }

    #[test]
    fn add_cancels_to_empty_map() {
        let a = letter("a");
        let sum = a.clone() + (-a);
        assert!(sum.is_zero());
        assert_eq!(sum.num_terms(), 0);
    }

    #[test]
    fn product_expansion() {
        // (b + c)(c + 3b) = 3b^2 + 4bc + c^2.
        let lhs = letter("b") + letter("c");
        let rhs = letter("c") + letter("b").mul_int(&Int::from(3));
        let got = lhs * rhs;
        let mut want = LaurentPoly::default();
        want.add_term(Monomial::letter_pow("b", 2), Int::from(3));
        want.add_term(Monomial::letter("b").combined(&Monomial::letter("c")), Int::from(4));
        want.add_term(Monomial::letter_pow("c", 2), Int::from(1));
        assert_eq!(got, want);
    }

    #[test]
    fn inverse_exponents_cancel() {
        let inv = LaurentPoly::letter_pow("a", -1);
        assert_eq!(inv * letter("a"), LaurentPoly::one());
    }

    #[test]
    fn constants() {
        assert_eq!(LaurentPoly::zero().as_constant(), Some(Int::zero()));
        assert_eq!(LaurentPoly::constant(Int::from(7)).as_constant(), Some(Int::from(7)));
        assert_eq!(letter("a").as_constant(), None);
    }

    #[test]
    fn display_rendering() {
        let p = letter("a") * letter("b").mul_int(&Int::from(-2)) + LaurentPoly::letter_pow("c", -1);
        assert_eq!(p.to_string(), "-2*a*b + c^-1");
    }
}
