//! Exact computation and machine verification of classical permutation
//! polynomial families.
//!
//! The crate computes Eulerian polynomials, André polynomials, Euler numbers,
//! alternating-run polynomials (types A and B), up-down run polynomials,
//! type B Eulerian polynomials, run polynomials of dual Stirling permutations
//! and derangement numbers — each by every route the literature provides:
//!
//! * triangle and differential recurrences,
//! * context-free grammar formal derivatives,
//! * lower Hessenberg determinant representations,
//! * brute-force enumeration of the underlying combinatorial classes,
//! * explicit summation formulas.
//!
//! All arithmetic is exact (arbitrary-precision integers); the [`verify`]
//! module cross-checks every route against every other and exercises the
//! identities connecting the families, reporting any discrepancy
//! coefficient-exactly.
//!
//! Start with the `examples/` directory for runnable tours of each
//! capability, or the `altrun` binary (`compute`, `det`, `verify`, `table`).

pub mod cli;
pub mod enumerate;
pub mod exact;
pub mod families;
pub mod grammar;
pub mod hessenberg;
pub mod verify;

pub use exact::{Int, LaurentPoly, Monomial, Rat, UniPoly};
