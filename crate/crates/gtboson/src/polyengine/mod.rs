//! Exact sparse polynomials over tagged variables, minors, the
//! Fock–Bargmann pairing and the `q·√r` number type.

mod matrix;
mod poly;
mod sqrt;
mod text;
mod var;

pub use matrix::{det, minor, symbolic_matrix, z_minor};
pub use poly::{bargmann_inner, diagonal_degrees, poly_int, ExactPoly};
pub use sqrt::{is_rational_square, square_free_split, SqrtRational, SurdSum};
pub use text::{parse_monomial, parse_poly};
pub use var::{Monomial, VarId};
