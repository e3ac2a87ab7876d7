//! Constructors for every polynomial family by every supported route.
//!
//! | family | values | routes |
//! |--------|--------|--------|
//! | `A` | Eulerian polynomials | recurrence, grammar, determinant, enumeration |
//! | `Andre` | bivariate leaf/unary tree polynomials | grammar, determinant, enumeration |
//! | `EulerNum` | Euler numbers | recurrence, grammar, determinant, enumeration |
//! | `R` | alternating run polynomials | triangle, differential recurrence, two determinants, grammar, enumeration, explicit sum, substitution from `Andre` |
//! | `S` | up-down run polynomials | differential recurrence, two determinants, grammar, enumeration, halved `(1+x) R_n` |
//! | `T` | type B alternating run polynomials | triangle, differential recurrence, two determinants, grammar, enumeration |
//! | `B` | type B Eulerian polynomials | differential recurrence, explicit sum, grammar, enumeration |
//! | `F` | dual-Stirling run polynomials | differential recurrence, two determinants, grammar, enumeration |
//! | `D` | derangement numbers | determinants, enumeration |
//!
//! Every route returns a fully normalized exact polynomial, so agreement
//! between routes is plain equality.

use std::fmt;

use num_traits::One;

use crate::enumerate::{self, Class, EnumError, SignedStat, Stat, WordStat};
use crate::exact::{rational_substitute, Int, LaurentPoly, UniPoly};

pub mod entries;
pub mod grammars;
pub mod matrices;
pub mod recurrences;
pub mod stanley;

pub use matrices::{build_matrix, build_matrix_andre, build_matrix_uni, BuiltMatrix};
pub use recurrences::{triangle_entry, triangle_poly, triangle_rows, TriangleId};
pub use stanley::{stanley_run_count, stanley_run_poly, typeb_eulerian_explicit};

/// The polynomial families this crate computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FamilyId {
    /// Eulerian polynomials `A_n(x)`.
    A,
    /// André polynomials `E_n(x,y)` (bivariate).
    Andre,
    /// Euler numbers `E_n` (alternating permutation counts).
    EulerNum,
    /// Type A alternating run polynomials `R_n(x)`.
    R,
    /// Up-down run polynomials `S_n(x)`.
    S,
    /// Type B alternating run polynomials `T_n(x)`.
    T,
    /// Type B Eulerian polynomials `B_n(x)`.
    B,
    /// Run polynomials of dual Stirling permutations `F_n(x)`.
    F,
    /// Derangement numbers `d_n`.
    D,
}

pub const ALL_FAMILIES: [FamilyId; 9] = [
    FamilyId::A,
    FamilyId::Andre,
    FamilyId::EulerNum,
    FamilyId::R,
    FamilyId::S,
    FamilyId::T,
    FamilyId::B,
    FamilyId::F,
    FamilyId::D,
];

impl FamilyId {
    pub fn name(self) -> &'static str {
        match self {
            FamilyId::A => "A",
            FamilyId::Andre => "Andre",
            FamilyId::EulerNum => "EulerNum",
            FamilyId::R => "R",
            FamilyId::S => "S",
            FamilyId::T => "T",
            FamilyId::B => "B",
            FamilyId::F => "F",
            FamilyId::D => "D",
        }
    }

    pub fn parse(s: &str) -> Option<FamilyId> {
        ALL_FAMILIES
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One printed determinant representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum DetVariant {
    /// Eulerian polynomials, order `n+1` for `A_(n+1)`.
    EulerianThm,
    /// André polynomials (bivariate), order `n` for `E_(n+1)`.
    AndreThm,
    /// Euler numbers, order `n` for `E_(n+1)`.
    EulerNumCor,
    /// Up-down runs with `s_k` entries, order `n` for `S_(n+1)`.
    SrThmAS,
    /// Alternating runs with `r_k`/`s_k` entries, order `n+1` for `R_(n+1)`.
    SrThmAR,
    /// Up-down runs with `f_k` entries and self-referential first column,
    /// order `n+1` for `S_(n+1)`.
    SrThmBS,
    /// Alternating runs with `f_k` entries and self-referential first
    /// column, order `n` for `R_(n+1)`.
    SrThmBR,
    /// Type B runs, order `n` for `T_n`.
    TThm,
    /// Type B runs over a first column of doubled up-down run values,
    /// order `n+1` for `T_(n+1)`.
    TTsThm,
    /// Dual-Stirling runs over type B Eulerian values, order `n+1` for
    /// `F_(n+1)`.
    FBtThm,
    /// Dual-Stirling runs, self-referential, order `n+1` for `F_(n+1)`.
    FFfThm,
    /// Derangement numbers, order `n` for `d_(n+2)`.
    Kit93,
    /// The tridiagonal derangement layout exactly as printed; evaluates to
    /// `-d_n` (a flagged, documented discrepancy).
    QiTridiagonal,
}

pub const ALL_DET_VARIANTS: [DetVariant; 13] = [
    DetVariant::EulerianThm,
    DetVariant::AndreThm,
    DetVariant::EulerNumCor,
    DetVariant::SrThmAS,
    DetVariant::SrThmAR,
    DetVariant::SrThmBS,
    DetVariant::SrThmBR,
    DetVariant::TThm,
    DetVariant::TTsThm,
    DetVariant::FBtThm,
    DetVariant::FFfThm,
    DetVariant::Kit93,
    DetVariant::QiTridiagonal,
];

impl DetVariant {
    pub fn name(self) -> &'static str {
        match self {
            DetVariant::EulerianThm => "eulerian_thm",
            DetVariant::AndreThm => "andre_thm",
            DetVariant::EulerNumCor => "eulernum_cor",
            DetVariant::SrThmAS => "sr_thm_a_s",
            DetVariant::SrThmAR => "sr_thm_a_r",
            DetVariant::SrThmBS => "sr_thm_b_s",
            DetVariant::SrThmBR => "sr_thm_b_r",
            DetVariant::TThm => "t_thm",
            DetVariant::TTsThm => "t_ts_thm",
            DetVariant::FBtThm => "f_bt_thm",
            DetVariant::FFfThm => "f_ff_thm",
            DetVariant::Kit93 => "kit93",
            DetVariant::QiTridiagonal => "qi_tridiagonal",
        }
    }

    pub fn parse(s: &str) -> Option<DetVariant> {
        ALL_DET_VARIANTS
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for DetVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A computation route for a family value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Method {
    /// Binomial-weighted recurrence (Eulerian polynomials, Euler numbers).
    Recurrence,
    /// First-order differential recurrence.
    DiffRecurrence,
    /// Coefficient triangle recurrence.
    Triangle,
    /// Grammar derivative read-out.
    Grammar,
    /// A specific determinant representation.
    Determinant(DetVariant),
    /// Brute-force enumeration of the defining class.
    Enumeration,
    /// Explicit summation formula.
    Explicit,
    /// `R_n` from the André polynomials by clearing `x/(1+x)` denominators.
    AndreSubstitution,
    /// `S_n` as half of `(1+x) R_n`.
    BonaFromR,
}

impl Method {
    pub fn name(&self) -> String {
        match self {
            Method::Recurrence => "recurrence".to_owned(),
            Method::DiffRecurrence => "diff_recurrence".to_owned(),
            Method::Triangle => "triangle".to_owned(),
            Method::Grammar => "grammar".to_owned(),
            Method::Determinant(v) => format!("determinant:{}", v.name()),
            Method::Enumeration => "enumeration".to_owned(),
            Method::Explicit => "explicit".to_owned(),
            Method::AndreSubstitution => "andre_substitution".to_owned(),
            Method::BonaFromR => "bona_from_r".to_owned(),
        }
    }

    /// Parses a method name; a bare `determinant` resolves to the family's
    /// default variant.
    pub fn parse(s: &str, family: FamilyId) -> Option<Method> {
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "recurrence" => Some(Method::Recurrence),
            "diff_recurrence" => Some(Method::DiffRecurrence),
            "triangle" => Some(Method::Triangle),
            "grammar" => Some(Method::Grammar),
            "enumeration" => Some(Method::Enumeration),
            "explicit" => Some(Method::Explicit),
            "andre_substitution" => Some(Method::AndreSubstitution),
            "bona_from_r" => Some(Method::BonaFromR),
            "determinant" => default_det_variant(family).map(Method::Determinant),
            _ => lower
                .strip_prefix("determinant:")
                .and_then(DetVariant::parse)
                .map(Method::Determinant),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// The determinant variant a bare `determinant` method resolves to.
pub fn default_det_variant(family: FamilyId) -> Option<DetVariant> {
    match family {
        FamilyId::A => Some(DetVariant::EulerianThm),
        FamilyId::Andre => Some(DetVariant::AndreThm),
        FamilyId::EulerNum => Some(DetVariant::EulerNumCor),
        FamilyId::R => Some(DetVariant::SrThmAR),
        FamilyId::S => Some(DetVariant::SrThmAS),
        FamilyId::T => Some(DetVariant::TThm),
        FamilyId::F => Some(DetVariant::FFfThm),
        FamilyId::D => Some(DetVariant::Kit93),
        FamilyId::B => None,
    }
}

/// The route used when none is requested.
pub fn default_method(family: FamilyId, n: usize) -> Method {
    match family {
        FamilyId::A | FamilyId::EulerNum => Method::Recurrence,
        FamilyId::Andre => Method::Grammar,
        FamilyId::R | FamilyId::S | FamilyId::T | FamilyId::B | FamilyId::F => {
            Method::DiffRecurrence
        }
        FamilyId::D => {
            if n >= 3 {
                Method::Determinant(DetVariant::Kit93)
            } else {
                Method::Enumeration
            }
        }
    }
}

/// Routes a family officially supports, with the inclusive index range on
/// which each is defined (before any enumeration feasibility guard).
pub fn supported_methods(family: FamilyId) -> Vec<(Method, usize, usize)> {
    const HI: usize = usize::MAX;
    match family {
        FamilyId::A => vec![
            (Method::Recurrence, 1, HI),
            (Method::Grammar, 1, HI),
            (Method::Determinant(DetVariant::EulerianThm), 1, HI),
            (Method::Enumeration, 1, enumerate::MAX_PERM_N),
        ],
        FamilyId::Andre => vec![
            (Method::Grammar, 1, HI),
            (Method::Determinant(DetVariant::AndreThm), 2, HI),
            (Method::Enumeration, 1, enumerate::MAX_TREE_N),
        ],
        FamilyId::EulerNum => vec![
            (Method::Recurrence, 1, HI),
            (Method::Grammar, 0, HI),
            (Method::Determinant(DetVariant::EulerNumCor), 2, HI),
            (Method::Enumeration, 0, enumerate::MAX_PERM_N),
        ],
        FamilyId::R => vec![
            (Method::DiffRecurrence, 0, HI),
            (Method::Triangle, 1, HI),
            (Method::Grammar, 0, HI),
            (Method::Determinant(DetVariant::SrThmAR), 2, HI),
            (Method::Determinant(DetVariant::SrThmBR), 2, HI),
            (Method::Enumeration, 0, enumerate::MAX_PERM_N),
            (Method::Explicit, 2, HI),
            (Method::AndreSubstitution, 2, HI),
        ],
        FamilyId::S => vec![
            (Method::DiffRecurrence, 0, HI),
            (Method::Grammar, 0, HI),
            (Method::Determinant(DetVariant::SrThmAS), 2, HI),
            (Method::Determinant(DetVariant::SrThmBS), 1, HI),
            (Method::Enumeration, 0, enumerate::MAX_PERM_N),
            (Method::BonaFromR, 2, HI),
        ],
        FamilyId::T => vec![
            (Method::DiffRecurrence, 1, HI),
            (Method::Triangle, 1, HI),
            (Method::Grammar, 1, HI),
            (Method::Determinant(DetVariant::TThm), 1, HI),
            (Method::Determinant(DetVariant::TTsThm), 2, HI),
            (Method::Enumeration, 1, enumerate::MAX_SIGNED_N),
        ],
        FamilyId::B => vec![
            (Method::DiffRecurrence, 0, HI),
            (Method::Explicit, 0, HI),
            (Method::Grammar, 0, HI),
            (Method::Enumeration, 0, enumerate::MAX_SIGNED_N),
        ],
        FamilyId::F => vec![
            (Method::DiffRecurrence, 0, HI),
            (Method::Grammar, 0, HI),
            (Method::Determinant(DetVariant::FBtThm), 2, HI),
            (Method::Determinant(DetVariant::FFfThm), 1, HI),
            (Method::Enumeration, 0, enumerate::MAX_STIRLING_N),
        ],
        FamilyId::D => vec![
            (Method::Determinant(DetVariant::Kit93), 3, HI),
            (Method::Determinant(DetVariant::QiTridiagonal), 1, HI),
            (Method::Enumeration, 0, enumerate::MAX_PERM_N),
        ],
    }
}

/// A family value: univariate for everything except the André polynomials.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilyValue {
    Uni(UniPoly),
    Biv(LaurentPoly),
}

impl FamilyValue {
    pub fn as_uni(&self) -> Option<&UniPoly> {
        match self {
            FamilyValue::Uni(p) => Some(p),
            FamilyValue::Biv(_) => None,
        }
    }

    pub fn as_biv(&self) -> Option<&LaurentPoly> {
        match self {
            FamilyValue::Biv(p) => Some(p),
            FamilyValue::Uni(_) => None,
        }
    }
}

impl fmt::Display for FamilyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyValue::Uni(p) => p.fmt(f),
            FamilyValue::Biv(p) => p.fmt(f),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FamilyError {
    UnsupportedMethod { family: FamilyId, method: String },
    UnsupportedOrder { what: String, n: usize, min: usize },
    TooLarge(EnumError),
    /// The grammar route's guaranteed `(1+x)` factor was absent; an engine
    /// bug, never a data condition.
    ExactDivisionFailed { family: FamilyId, n: usize },
    /// The explicit rational sum did not collapse to an integer.
    NonIntegerResult { n: usize, k: usize },
    /// A grammar read-out produced a monomial outside the guaranteed shape.
    ReadoutMismatch { context: String },
    /// A univariate value was requested from the bivariate family.
    BivariateValue { context: String },
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::UnsupportedMethod { family, method } => {
                write!(f, "family {family} does not support method {method}")
            }
            FamilyError::UnsupportedOrder { what, n, min } => {
                write!(f, "{what} starts at n = {min}, got {n}")
            }
            FamilyError::TooLarge(e) => e.fmt(f),
            FamilyError::ExactDivisionFailed { family, n } => {
                write!(f, "(1+x) does not divide the {family} grammar image at n = {n}")
            }
            FamilyError::NonIntegerResult { n, k } => {
                write!(f, "explicit sum at (n, k) = ({n}, {k}) is not an integer")
            }
            FamilyError::ReadoutMismatch { context } => write!(f, "read-out mismatch: {context}"),
            FamilyError::BivariateValue { context } => write!(f, "{context}"),
        }
    }
}

impl std::error::Error for FamilyError {}

impl From<EnumError> for FamilyError {
    fn from(e: EnumError) -> Self {
        FamilyError::TooLarge(e)
    }
}

fn unsupported(family: FamilyId, method: &Method) -> FamilyError {
    FamilyError::UnsupportedMethod {
        family,
        method: method.name(),
    }
}

fn order_guard(family: FamilyId, method: &Method, n: usize) -> Result<(), FamilyError> {
    let supported = supported_methods(family);
    let Some((_, lo, hi)) = supported.iter().find(|(m, _, _)| m == method) else {
        return Err(unsupported(family, method));
    };
    if n < *lo || n > *hi {
        return Err(FamilyError::UnsupportedOrder {
            what: format!("{family} via {}", method.name()),
            n,
            min: *lo,
        });
    }
    Ok(())
}

/// Computes the family value at index `n` by the requested route.
pub fn family(id: FamilyId, n: usize, method: &Method) -> Result<FamilyValue, FamilyError> {
    order_guard(id, method, n)?;
    if let Method::Determinant(variant) = method {
        return family_by_determinant(id, n, *variant);
    }
    let uni = match (id, method) {
        (FamilyId::A, Method::Recurrence) => recurrences::eulerian_seq(n)[n].clone(),
        (FamilyId::A, Method::Grammar) => grammars::eulerian_via_grammar(n),
        (FamilyId::A, Method::Enumeration) => {
            // A_n = sum over permutations of x^(des + 1).
            enumerate::distribution(n, Class::Perm, Stat::Word(WordStat::Des))?.mul_xpow(1)
        }
        (FamilyId::Andre, Method::Grammar) => {
            return Ok(FamilyValue::Biv(grammars::andre_via_grammar(n)))
        }
        (FamilyId::Andre, Method::Enumeration) => {
            return Ok(FamilyValue::Biv(enumerate::tree_distribution(n)?))
        }
        (FamilyId::EulerNum, Method::Recurrence) => {
            UniPoly::constant(recurrences::euler_number_seq(n)[n].clone())
        }
        (FamilyId::EulerNum, Method::Grammar) => {
            UniPoly::constant(grammars::euler_number_via_grammar(n))
        }
        (FamilyId::EulerNum, Method::Enumeration) => {
            UniPoly::constant(enumerate::alternating_count(n)?)
        }
        (FamilyId::R, Method::DiffRecurrence) => recurrences::run_seq(n)[n].clone(),
        (FamilyId::R, Method::Triangle) => recurrences::triangle_poly(TriangleId::R, n),
        (FamilyId::R, Method::Grammar) => grammars::run_via_grammar(n),
        (FamilyId::R, Method::Enumeration) => {
            enumerate::distribution(n, Class::Perm, Stat::Word(WordStat::Run))?
        }
        (FamilyId::R, Method::Explicit) => stanley::stanley_run_poly(n)?,
        (FamilyId::R, Method::AndreSubstitution) => run_by_andre_substitution(n)?,
        (FamilyId::S, Method::DiffRecurrence) => recurrences::updown_seq(n)[n].clone(),
        (FamilyId::S, Method::Grammar) => grammars::updown_via_grammar(n),
        (FamilyId::S, Method::Enumeration) => {
            enumerate::distribution(n, Class::Perm, Stat::Word(WordStat::UdRun))?
        }
        (FamilyId::S, Method::BonaFromR) => {
            let r = recurrences::run_seq(n)[n].clone();
            let doubled = UniPoly::from_i64(&[1, 1]) * r;
            doubled
                .exact_div(&UniPoly::from_i64(&[2]))
                .expect("(1+x) R_n has even coefficients")
        }
        (FamilyId::T, Method::DiffRecurrence) => recurrences::typeb_run_seq(n)[n].clone(),
        (FamilyId::T, Method::Triangle) => recurrences::triangle_poly(TriangleId::T, n),
        (FamilyId::T, Method::Grammar) => grammars::typeb_run_via_grammar(n)?,
        (FamilyId::T, Method::Enumeration) => {
            enumerate::distribution(n, Class::UpSigned, Stat::Signed(SignedStat::RunB))?
        }
        (FamilyId::B, Method::DiffRecurrence) => recurrences::typeb_eulerian_seq(n)[n].clone(),
        (FamilyId::B, Method::Explicit) => stanley::typeb_eulerian_explicit(n),
        (FamilyId::B, Method::Grammar) => grammars::typeb_eulerian_via_grammar(n)?,
        (FamilyId::B, Method::Enumeration) => {
            enumerate::distribution(n, Class::Signed, Stat::Signed(SignedStat::DesB))?
        }
        (FamilyId::F, Method::DiffRecurrence) => recurrences::dual_run_seq(n)[n].clone(),
        (FamilyId::F, Method::Grammar) => grammars::dual_run_via_grammar(n),
        (FamilyId::F, Method::Enumeration) => {
            enumerate::distribution(n, Class::DualStirling, Stat::Word(WordStat::Run))?
        }
        (FamilyId::D, Method::Enumeration) => UniPoly::constant(enumerate::derangement_count(n)?),
        _ => return Err(unsupported(id, method)),
    };
    Ok(FamilyValue::Uni(uni))
}

/// Univariate family value; errors when the family is bivariate.
pub fn family_uni(id: FamilyId, n: usize, method: &Method) -> Result<UniPoly, FamilyError> {
    match family(id, n, method)? {
        FamilyValue::Uni(p) => Ok(p),
        FamilyValue::Biv(_) => Err(FamilyError::BivariateValue {
            context: format!("family {id} is bivariate"),
        }),
    }
}

fn family_by_determinant(
    id: FamilyId,
    n: usize,
    variant: DetVariant,
) -> Result<FamilyValue, FamilyError> {
    let (owner, _) = variant.family_index(0);
    if owner != id {
        return Err(unsupported(id, &Method::Determinant(variant)));
    }
    let param = variant
        .param_for_index(n)
        .ok_or_else(|| FamilyError::UnsupportedOrder {
            what: format!("determinant {}", variant.name()),
            n,
            min: 1,
        })?;
    match build_matrix(variant, param)? {
        BuiltMatrix::Uni(m) => Ok(FamilyValue::Uni(m.det_recursive())),
        BuiltMatrix::Biv(m) => Ok(FamilyValue::Biv(m.det_recursive())),
    }
}

/// `R_n = 2 (1+x)^(n-1) E_n(x/(1+x), 1)`, evaluated by clearing the
/// denominator exactly; defined for `n >= 2`.
pub fn run_by_andre_substitution(n: usize) -> Result<UniPoly, FamilyError> {
    if n < 2 {
        return Err(FamilyError::UnsupportedOrder {
            what: "substitution from the André polynomials".to_owned(),
            n,
            min: 2,
        });
    }
    let leaf = grammars::andre_leaf_poly(n);
    let substituted = rational_substitute(
        &leaf,
        &UniPoly::x(),
        &UniPoly::from_i64(&[1, 1]),
        n - 1,
    )
    .map_err(|_| FamilyError::UnsupportedOrder {
        what: "André leaf polynomial degree exceeds n - 1".to_owned(),
        n,
        min: 2,
    })?;
    Ok(substituted.mul_int(&Int::from(2)))
}

/// Derangement numbers `d_0..d_max`: the sub-3 values are fixed
/// (`1, 0, 1`), the rest are the nested determinant prefix.
pub fn derangement_seq(max: usize) -> Vec<Int> {
    let mut seq = vec![Int::one()];
    if max == 0 {
        return seq;
    }
    seq.push(Int::from(0));
    if max == 1 {
        return seq;
    }
    seq.push(Int::one());
    if max >= 3 {
        let m = build_matrix_uni(DetVariant::Kit93, max - 2).expect("parameter >= 1");
        for minor in m.leading_minors().into_iter().skip(1) {
            seq.push(minor.coeff(0));
        }
    }
    seq
}
