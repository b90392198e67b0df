//! Exact Gel'fand–Tsetlin combinatorics and boson polynomial bases of U(n).
//!
//! Modules, bottom up:
//! - [`polyengine`]: sparse exact polynomials over tagged variables, minors,
//!   the Fock–Bargmann pairing and `q·√r` numbers.
//! - [`gelfand`]: labels, patterns, weights, L/R exponents and binary words.
//! - [`basisgen`]: kernels, basis polynomials of U(2)–U(4), normalisations,
//!   `P_n(1)` and semi-maximal D-functions.
//! - [`coupling`]: SU(2) 3-j symbols and SU(3) Wigner coefficients and
//!   isoscalar factors.
//!
//! Everything is exact. No floating point is used anywhere in a result.

pub mod basisgen;
pub mod coupling;
pub mod error;
pub mod exact;
pub mod gelfand;
pub mod linsys;
pub mod polyengine;
pub mod selftest;

pub use error::{Error, Result};
