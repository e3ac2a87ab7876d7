//! Brute-force generators and statistics for permutations, signed
//! permutations, Stirling permutations and 0-1-2 increasing trees.
//!
//! These are the ground-truth oracles for every polynomial family: each
//! distribution is the literal sum of `x^stat` over the class. Generators
//! are streaming (visitor style) and never materialize a class, so memory
//! stays O(n) even for the two-million-word Stirling classes.

use std::fmt;

use num_traits::Zero;

use crate::exact::{Int, LaurentPoly, Monomial, UniPoly};

// Feasibility guards for full enumeration, per class.
pub const MAX_PERM_N: usize = 9;
pub const MAX_SIGNED_N: usize = 7;
pub const MAX_STIRLING_N: usize = 8;
pub const MAX_TREE_N: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumError {
    TooLarge { class: Class, n: usize, max: usize },
    UnsupportedStatForClass { class: Class, stat: Stat },
    InvalidWord { reason: String },
    InvalidStirlingWord { reason: String },
}

impl fmt::Display for EnumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumError::TooLarge { class, n, max } => {
                write!(f, "{class:?} enumeration guarded at n <= {max}, got {n}")
            }
            EnumError::UnsupportedStatForClass { class, stat } => {
                write!(f, "statistic {stat:?} is not defined for class {class:?}")
            }
            EnumError::InvalidWord { reason } => write!(f, "invalid word: {reason}"),
            EnumError::InvalidStirlingWord { reason } => {
                write!(f, "invalid Stirling permutation: {reason}")
            }
        }
    }
}

impl std::error::Error for EnumError {}

// ---------------------------------------------------------------------------
// Words and statistics
// ---------------------------------------------------------------------------

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(entries: Vec<u32>) -> Result<Self, EnumError> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            if e == 0 || e as usize > n || seen[e as usize] {
                return Err(EnumError::InvalidWord {
                    reason: format!("{entries:?} is not a permutation of 1..={n}"),
                });
            }
            seen[e as usize] = true;
        }
        Ok(Word(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }
}

/// A signed permutation, one-line; the implicit leading 0 is not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedWord(Vec<i64>);

impl SignedWord {
    pub fn new(entries: Vec<i64>) -> Result<Self, EnumError> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            let a = e.unsigned_abs() as usize;
            if e == 0 || a > n || seen[a] {
                return Err(EnumError::InvalidWord {
                    reason: format!("|{entries:?}| is not a permutation of 1..={n}"),
                });
            }
            seen[a] = true;
        }
        Ok(SignedWord(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }
}

/// A word over `{1,1,2,2,...,n,n}` in which everything strictly between the
/// two copies of `i` exceeds `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StirlingWord(Vec<u32>);

impl StirlingWord {
    pub fn new(entries: Vec<u32>) -> Result<Self, EnumError> {
        check_stirling(&entries)?;
        Ok(StirlingWord(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len() / 2
    }
}

fn check_stirling(entries: &[u32]) -> Result<(), EnumError> {
    if entries.len() % 2 != 0 {
        return Err(EnumError::InvalidStirlingWord {
            reason: "odd length".to_owned(),
        });
    }
    let n = entries.len() / 2;
    let mut first = vec![usize::MAX; n + 1];
    let mut count = vec![0usize; n + 1];
    for (i, &e) in entries.iter().enumerate() {
        if e == 0 || e as usize > n {
            return Err(EnumError::InvalidStirlingWord {
                reason: format!("entry {e} outside 1..={n}"),
            });
        }
        let v = e as usize;
        count[v] += 1;
        if count[v] == 1 {
            first[v] = i;
        } else if count[v] > 2 {
            return Err(EnumError::InvalidStirlingWord {
                reason: format!("value {v} appears more than twice"),
            });
        }
    }
    if count.iter().skip(1).any(|&c| c != 2) {
        return Err(EnumError::InvalidStirlingWord {
            reason: "some value does not appear exactly twice".to_owned(),
        });
    }
    for v in 1..=n {
        let lo = first[v];
        let hi = entries
            .iter()
            .rposition(|&e| e as usize == v)
            .expect("value present");
        if entries[lo + 1..hi].iter().any(|&e| (e as usize) < v) {
            return Err(EnumError::InvalidStirlingWord {
                reason: format!("a smaller entry sits between the copies of {v}"),
            });
        }
    }
    Ok(())
}

/// Rooted 0-1-2 increasing tree on vertices `{0..n-1}`, rooted at 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tree012 {
    parents: Vec<usize>,
}

impl Tree012 {
    /// `parents[v]` is the parent of `v` for `v >= 1`; `parents[0]` is ignored.
    pub fn from_parents(parents: Vec<usize>) -> Result<Self, EnumError> {
        let n = parents.len();
        let mut child_count = vec![0usize; n];
        for v in 1..n {
            let p = parents[v];
            if p >= v {
                return Err(EnumError::InvalidWord {
                    reason: format!("parent {p} of {v} does not precede it"),
                });
            }
            child_count[p] += 1;
            if child_count[p] > 2 {
                return Err(EnumError::InvalidWord {
                    reason: format!("vertex {p} has more than two children"),
                });
            }
        }
        Ok(Tree012 { parents })
    }

    pub fn order(&self) -> usize {
        self.parents.len()
    }

    fn child_counts(&self) -> Vec<u8> {
        let mut counts = vec![0u8; self.parents.len()];
        for v in 1..self.parents.len() {
            counts[self.parents[v]] += 1;
        }
        counts
    }

    /// Number of leaves.
    pub fn leaves(&self) -> usize {
        self.child_counts().iter().filter(|&&c| c == 0).count()
    }

    /// Number of vertices with exactly one child.
    pub fn unary(&self) -> usize {
        self.child_counts().iter().filter(|&&c| c == 1).count()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordStat {
    Des,
    Exc,
    Drop,
    Run,
    UdRun,
    IsAlternating,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignedStat {
    DesB,
    RunB,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StirlingStat {
    Ap,
    Fap,
}

/// Number of maximal monotone segments of a word (each of length >= 2,
/// with consecutive segments sharing an endpoint). A word of length < 2
/// has no runs.
fn run_count(vals: &[i64]) -> usize {
    if vals.len() < 2 {
        return 0;
    }
    let mut runs = 1;
    let mut prev_up = vals[1] > vals[0];
    for w in vals.windows(2).skip(1) {
        let up = w[1] > w[0];
        if up != prev_up {
            runs += 1;
            prev_up = up;
        }
    }
    runs
}

pub fn word_stat(w: &Word, stat: WordStat) -> usize {
    let v = w.entries();
    match stat {
        WordStat::Des => v.windows(2).filter(|p| p[0] > p[1]).count(),
        WordStat::Exc => v.iter().enumerate().filter(|&(i, &e)| e as usize > i + 1).count(),
        WordStat::Drop => v.iter().enumerate().filter(|&(i, &e)| (e as usize) < i + 1).count(),
        WordStat::Run => {
            let vals: Vec<i64> = v.iter().map(|&e| i64::from(e)).collect();
            run_count(&vals)
        }
        WordStat::UdRun => {
            let mut vals: Vec<i64> = Vec::with_capacity(v.len() + 1);
            vals.push(0);
            vals.extend(v.iter().map(|&e| i64::from(e)));
            run_count(&vals)
        }
        WordStat::IsAlternating => usize::from(is_alternating(v)),
    }
}

/// Down-up pattern pi(1) > pi(2) < pi(3) > ... at every adjacent pair.
fn is_alternating(v: &[u32]) -> bool {
    v.windows(2).enumerate().all(|(i, w)| {
        if i % 2 == 0 {
            w[0] > w[1]
        } else {
            w[0] < w[1]
        }
    })
}

/// Statistics of the 0-prefixed word of a signed permutation.
pub fn signed_stat(w: &SignedWord, stat: SignedStat) -> usize {
    let mut vals: Vec<i64> = Vec::with_capacity(w.entries().len() + 1);
    vals.push(0);
    vals.extend_from_slice(w.entries());
    match stat {
        SignedStat::DesB => vals.windows(2).filter(|p| p[0] > p[1]).count(),
        SignedStat::RunB => run_count(&vals),
    }
}

pub fn stirling_stat(s: &StirlingWord, stat: StirlingStat) -> usize {
    let v = s.entries();
    let ap = (1..v.len().saturating_sub(1))
        .filter(|&i| v[i - 1] < v[i] && v[i] == v[i + 1])
        .count();
    match stat {
        StirlingStat::Ap => ap,
        StirlingStat::Fap => 2 * ap + usize::from(v.len() >= 2 && v[0] == v[1]),
    }
}

/// The duality map on Stirling permutations: the first copy of `j` becomes
/// `2j`, the second copy `2j - 1`. The image is an ordinary permutation of
/// `{1..2n}`.
pub fn phi(s: &StirlingWord) -> Word {
    let n = s.order();
    let mut seen = vec![false; n + 1];
    let mut out = Vec::with_capacity(2 * n);
    for &e in s.entries() {
        let v = e as usize;
        if seen[v] {
            out.push(2 * e - 1);
        } else {
            seen[v] = true;
            out.push(2 * e);
        }
    }
    Word::new(out).expect("phi image is a permutation")
}

// ---------------------------------------------------------------------------
// Streaming generators
// ---------------------------------------------------------------------------

/// Visits every permutation of `{1..n}` exactly once.
pub fn for_each_permutation<F: FnMut(&[u32])>(n: usize, mut f: F) {
    let mut arr: Vec<u32> = (1..=n as u32).collect();
    fn rec<F: FnMut(&[u32])>(arr: &mut [u32], k: usize, f: &mut F) {
        if k == arr.len() {
            f(arr);
            return;
        }
        for i in k..arr.len() {
            arr.swap(k, i);
            rec(arr, k + 1, f);
            arr.swap(k, i);
        }
    }
    rec(&mut arr, 0, &mut f);
}

/// Visits every signed permutation (all `2^n n!` sign/word combinations).
pub fn for_each_signed_word<F: FnMut(&[i64])>(n: usize, mut f: F) {
    let mut buf = vec![0i64; n];
    for_each_permutation(n, |perm| {
        for mask in 0u32..(1 << n) {
            for (i, &e) in perm.iter().enumerate() {
                let signed = i64::from(e);
                buf[i] = if mask & (1 << i) != 0 { -signed } else { signed };
            }
            f(&buf);
        }
    });
}

/// Visits every Stirling permutation of order `n`, built by inserting the
/// pair `kk` into each gap of an order-`k-1` word; validity holds by
/// construction.
pub fn for_each_stirling_word<F: FnMut(&[u32])>(n: usize, mut f: F) {
    fn rec<F: FnMut(&[u32])>(word: &mut Vec<u32>, k: u32, n: u32, f: &mut F) {
        if k > n {
            f(word);
            return;
        }
        for gap in 0..=word.len() {
            word.insert(gap, k);
            word.insert(gap, k);
            rec(word, k + 1, n, f);
            word.remove(gap);
            word.remove(gap);
        }
    }
    rec(&mut Vec::with_capacity(2 * n), 1, n as u32, &mut f);
}

/// Visits every 0-1-2 increasing tree on `{0..n-1}` as (parents, child counts).
pub fn for_each_tree012<F: FnMut(&[usize], &[u8])>(n: usize, mut f: F) {
    if n == 0 {
        return;
    }
    let mut parents = vec![0usize];
    let mut counts = vec![0u8];
    fn rec<F: FnMut(&[usize], &[u8])>(
        v: usize,
        n: usize,
        parents: &mut Vec<usize>,
        counts: &mut Vec<u8>,
        f: &mut F,
    ) {
        if v == n {
            f(parents, counts);
            return;
        }
        for p in 0..v {
            if counts[p] < 2 {
                counts[p] += 1;
                parents.push(p);
                counts.push(0);
                rec(v + 1, n, parents, counts, f);
                counts.pop();
                parents.pop();
                counts[p] -= 1;
            }
        }
    }
    rec(1, n, &mut parents, &mut counts, &mut f);
}

// ---------------------------------------------------------------------------
// Distributions
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Class {
    Perm,
    Signed,
    UpSigned,
    Stirling,
    DualStirling,
    Tree012,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stat {
    Word(WordStat),
    Signed(SignedStat),
    Stirling(StirlingStat),
}

fn guard(class: Class, n: usize) -> Result<(), EnumError> {
    let max = match class {
        Class::Perm => MAX_PERM_N,
        Class::Signed | Class::UpSigned => MAX_SIGNED_N,
        Class::Stirling | Class::DualStirling => MAX_STIRLING_N,
        Class::Tree012 => MAX_TREE_N,
    };
    if n > max {
        return Err(EnumError::TooLarge { class, n, max });
    }
    Ok(())
}

fn counts_to_poly(counts: Vec<u64>) -> UniPoly {
    UniPoly::from_coeffs(counts.into_iter().map(Int::from).collect())
}

/// Sum of `x^stat` over the class, exactly.
pub fn distribution(n: usize, class: Class, stat: Stat) -> Result<UniPoly, EnumError> {
    guard(class, n)?;
    let unsupported = || EnumError::UnsupportedStatForClass { class, stat };
    // Counts fit comfortably in u64 at every guarded size.
    let mut counts: Vec<u64> = Vec::new();
    let mut bump = |k: usize| {
        if counts.len() <= k {
            counts.resize(k + 1, 0);
        }
        counts[k] += 1;
    };
    match (class, stat) {
        (Class::Perm, Stat::Word(ws)) => {
            for_each_permutation(n, |perm| {
                let w = Word(perm.to_vec());
                bump(word_stat(&w, ws));
            });
        }
        (Class::Signed, Stat::Signed(ss)) => {
            for_each_signed_word(n, |word| {
                let w = SignedWord(word.to_vec());
                bump(signed_stat(&w, ss));
            });
        }
        (Class::UpSigned, Stat::Signed(ss)) => {
            for_each_signed_word(n, |word| {
                if word.first().map_or(true, |&e| e > 0) {
                    let w = SignedWord(word.to_vec());
                    bump(signed_stat(&w, ss));
                }
            });
        }
        (Class::Stirling, Stat::Stirling(ss)) => {
            for_each_stirling_word(n, |word| {
                let w = StirlingWord(word.to_vec());
                bump(stirling_stat(&w, ss));
            });
        }
        (Class::DualStirling, Stat::Word(ws)) => {
            for_each_stirling_word(n, |word| {
                let w = StirlingWord(word.to_vec());
                bump(word_stat(&phi(&w), ws));
            });
        }
        _ => return Err(unsupported()),
    }
    Ok(counts_to_poly(counts))
}

/// Bivariate leaf/unary-vertex distribution over 0-1-2 increasing trees,
/// as a polynomial in the letters `x` (leaves) and `y` (unary vertices).
pub fn tree_distribution(n: usize) -> Result<LaurentPoly, EnumError> {
    guard(Class::Tree012, n)?;
    let mut out = LaurentPoly::zero();
    // Term counts are small; accumulate directly.
    let mut sink = |leaves: usize, unary: usize| {
        let m = Monomial::letter_pow("x", leaves as i32)
            .combined(&Monomial::letter_pow("y", unary as i32));
        out.add_term(m, Int::from(1));
    };
    for_each_tree012(n, |_, counts| {
        let leaves = counts.iter().filter(|&&c| c == 0).count();
        let unary = counts.iter().filter(|&&c| c == 1).count();
        sink(leaves, unary);
    });
    Ok(out)
}

/// Number of fixed-point-free permutations of `{1..n}`.
pub fn derangement_count(n: usize) -> Result<Int, EnumError> {
    guard(Class::Perm, n)?;
    let mut count = 0u64;
    for_each_permutation(n, |perm| {
        if perm.iter().enumerate().all(|(i, &e)| e as usize != i + 1) {
            count += 1;
        }
    });
    Ok(Int::from(count))
}

/// Number of alternating (down-up) permutations of `{1..n}`.
pub fn alternating_count(n: usize) -> Result<Int, EnumError> {
    guard(Class::Perm, n)?;
    let mut count = 0u64;
    for_each_permutation(n, |perm| {
        if is_alternating(perm) {
            count += 1;
        }
    });
    Ok(Int::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(e: &[u32]) -> Word {
        Word::new(e.to_vec()).unwrap()
    }

    fn upoly(c: &[i64]) -> UniPoly {
        UniPoly::from_i64(c)
    }

    #[test]
    fn run_statistics_worked_example() {
        let w = word(&[8, 2, 3, 1, 5, 4, 6, 7]);
        assert_eq!(word_stat(&w, WordStat::Run), 6);
        assert_eq!(word_stat(&w, WordStat::UdRun), 7);
    }

    #[test]
    fn identity_has_no_descents() {
        let w = word(&[1, 2, 3, 4, 5, 6]);
        assert_eq!(word_stat(&w, WordStat::Des), 0);
        assert_eq!(word_stat(&w, WordStat::Run), 1);
        assert_eq!(word_stat(&w, WordStat::UdRun), 1);
    }

    #[test]
    fn single_letter_word_has_no_runs() {
        let w = word(&[1]);
        assert_eq!(word_stat(&w, WordStat::Run), 0);
        assert_eq!(word_stat(&w, WordStat::UdRun), 1);
    }

    #[test]
    fn alternating_convention() {
        assert_eq!(word_stat(&word(&[2, 1, 3]), WordStat::IsAlternating), 1);
        assert_eq!(word_stat(&word(&[3, 1, 2]), WordStat::IsAlternating), 1);
        assert_eq!(word_stat(&word(&[1, 3, 2]), WordStat::IsAlternating), 0);
        assert_eq!(alternating_count(3).unwrap(), Int::from(2));
        assert_eq!(alternating_count(4).unwrap(), Int::from(5));
    }

    #[test]
    fn signed_statistics() {
        let w = SignedWord::new(vec![-1]).unwrap();
        assert_eq!(signed_stat(&w, SignedStat::DesB), 1);
        let up = SignedWord::new(vec![2, -1]).unwrap();
        assert_eq!(signed_stat(&up, SignedStat::RunB), 2);
        let id = SignedWord::new(vec![1, 2, 3]).unwrap();
        assert_eq!(signed_stat(&id, SignedStat::DesB), 0);
    }

    #[test]
    fn flag_ascent_plateaus() {
        let s = |e: &[u32]| StirlingWord::new(e.to_vec()).unwrap();
        assert_eq!(stirling_stat(&s(&[1, 1]), StirlingStat::Fap), 1);
        assert_eq!(stirling_stat(&s(&[1, 2, 2, 1]), StirlingStat::Fap), 2);
        assert_eq!(stirling_stat(&s(&[2, 2, 1, 1]), StirlingStat::Fap), 1);
        assert_eq!(stirling_stat(&s(&[1, 1, 2, 2]), StirlingStat::Ap), 1);
    }

    #[test]
    fn stirling_validation() {
        assert!(StirlingWord::new(vec![2, 1, 2, 1]).is_err());
        assert!(StirlingWord::new(vec![1, 2, 1, 2]).is_err());
        assert!(StirlingWord::new(vec![1, 1, 1]).is_err());
        assert!(StirlingWord::new(vec![1, 2, 2, 1]).is_ok());
    }

    #[test]
    fn phi_worked_examples() {
        let s = |e: &[u32]| StirlingWord::new(e.to_vec()).unwrap();
        assert_eq!(phi(&s(&[2, 2, 1, 3, 3, 1])).entries(), &[4, 3, 2, 6, 5, 1]);
        assert_eq!(phi(&s(&[1, 1])).entries(), &[2, 1]);
        assert_eq!(phi(&s(&[1, 1, 2, 2])).entries(), &[2, 1, 4, 3]);
    }

    #[test]
    fn distributions_match_small_families() {
        // R_3, T_2 and E_4(x,y) from their defining sums.
        assert_eq!(
            distribution(3, Class::Perm, Stat::Word(WordStat::Run)).unwrap(),
            upoly(&[0, 2, 4])
        );
        assert_eq!(
            distribution(2, Class::UpSigned, Stat::Signed(SignedStat::RunB)).unwrap(),
            upoly(&[0, 1, 3])
        );
        let e4 = tree_distribution(4).unwrap();
        let mut want = LaurentPoly::zero();
        want.add_term(
            Monomial::letter("x").combined(&Monomial::letter_pow("y", 3)),
            Int::from(1),
        );
        want.add_term(
            Monomial::letter_pow("x", 2).combined(&Monomial::letter("y")),
            Int::from(4),
        );
        assert_eq!(e4, want);
    }

    #[test]
    fn equidistribution_of_descents_excedances_drops() {
        for n in 0..=6 {
            let des = distribution(n, Class::Perm, Stat::Word(WordStat::Des)).unwrap();
            let exc = distribution(n, Class::Perm, Stat::Word(WordStat::Exc)).unwrap();
            let drop = distribution(n, Class::Perm, Stat::Word(WordStat::Drop)).unwrap();
            assert_eq!(des, exc, "n = {n}");
            assert_eq!(des, drop, "n = {n}");
        }
    }

    #[test]
    fn stirling_class_sizes_are_odd_double_factorials() {
        let mut want = 1u64;
        for n in 1..=6 {
            want *= 2 * n as u64 - 1;
            let mut count = 0u64;
            for_each_stirling_word(n, |w| {
                check_stirling(w).expect("generator emits valid words");
                count += 1;
            });
            assert_eq!(count, want, "n = {n}");
        }
    }

    #[test]
    fn fap_equals_runs_of_dual_word() {
        for n in 1..=6 {
            for_each_stirling_word(n, |w| {
                let s = StirlingWord(w.to_vec());
                assert_eq!(
                    stirling_stat(&s, StirlingStat::Fap),
                    word_stat(&phi(&s), WordStat::Run)
                );
            });
        }
    }

    #[test]
    fn alternating_counts_match_euler_numbers() {
        // 1, 1, 1, 2, 5, 16, 61, 272 for n = 0..7.
        let want = [1u64, 1, 1, 2, 5, 16, 61, 272];
        for (n, &w) in want.iter().enumerate() {
            assert_eq!(alternating_count(n).unwrap(), Int::from(w), "n = {n}");
        }
    }

    #[test]
    fn run_distribution_degrees() {
        for n in 2..=7 {
            let run = distribution(n, Class::Perm, Stat::Word(WordStat::Run)).unwrap();
            let udrun = distribution(n, Class::Perm, Stat::Word(WordStat::UdRun)).unwrap();
            assert_eq!(run.degree(), Some(n - 1), "run degree at n = {n}");
            assert_eq!(udrun.degree(), Some(n), "udrun degree at n = {n}");
        }
    }

    #[test]
    fn tree_counts() {
        // |E_n| = 1, 1, 2, 5, 16 for n = 1..5.
        for (n, want) in [(1, 1u64), (2, 1), (3, 2), (4, 5), (5, 16)] {
            let mut count = 0;
            for_each_tree012(n, |parents, counts| {
                assert_eq!(parents.len(), n);
                assert!(counts.iter().all(|&c| c <= 2));
                count += 1;
            });
            assert_eq!(count, want, "n = {n}");
        }
    }

    #[test]
    fn tree012_validation() {
        assert!(Tree012::from_parents(vec![0, 0, 0, 0]).is_err());
        let path = Tree012::from_parents(vec![0, 0, 1]).unwrap();
        assert_eq!(path.leaves(), 1);
        assert_eq!(path.unary(), 2);
    }

    #[test]
    fn guards_reject_oversized_classes() {
        assert!(matches!(
            distribution(10, Class::Perm, Stat::Word(WordStat::Des)),
            Err(EnumError::TooLarge { .. })
        ));
        assert!(matches!(
            distribution(8, Class::Signed, Stat::Signed(SignedStat::DesB)),
            Err(EnumError::TooLarge { .. })
        ));
    }

    #[test]
    fn unsupported_stat_class_pairs() {
        assert!(matches!(
            distribution(3, Class::Perm, Stat::Signed(SignedStat::DesB)),
            Err(EnumError::UnsupportedStatForClass { .. })
        ));
    }

    #[test]
    fn empty_class_distributions() {
        assert_eq!(
            distribution(0, Class::Perm, Stat::Word(WordStat::Run)).unwrap(),
            upoly(&[1])
        );
        assert_eq!(derangement_count(0).unwrap(), Int::from(1));
    }
}
