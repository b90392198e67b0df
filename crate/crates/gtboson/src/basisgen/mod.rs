//! Normalisation constants, kernels and Gel'fand basis polynomials of
//! U(2)–U(4), the `P_n(1)` factors and semi-maximal D-functions.

mod closed;
mod consts;
mod dfunc;
mod kernel;
mod pn1;

pub use closed::{u2_basis_closed, u3_basis_closed, u3_basis_f21, u4_basis_closed, u4_free_count, u4_index_system, U4_INDEX_NAMES};
pub use consts::{
    const_a, const_branching_ratio, f21_norm_sq, in_f21_domain, n2_sq, n3_printed, semimax_norm,
    semimax_norm_printed,
};
pub use dfunc::{d_semimax_eval, DValue};
pub use kernel::{basis_from_branching, basis_set, branching_kernel, reslot, semimax_poly, BasisPolynomial};
pub use pn1::{pn1_bruteforce, pn1_closed};
