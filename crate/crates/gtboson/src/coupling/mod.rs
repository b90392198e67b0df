//! SU(2) 3-j symbols and SU(3) Wigner coefficients with multiplicity.

mod param;
mod su2;
mod su3;
mod table;

pub use param::{
    closed_sum, index_matrix, index_solutions_bruteforce, index_solutions_closed, k_exponents, k_of_solution,
    param_coefficient, param_expansion, su6_from_k, triple_to_su6, w_invariants, IndexInputs, Su6Pattern,
};
pub use su2::{racah_threej, su2_jm, su2_pattern, su2_threej, xi};
pub use su3::{balanced_triples, invariant_poly, solve_k, su3_table, z_invariants, KVector};
pub use table::{
    check_completeness, check_orthogonality, isoscalar_table, su2_part, su3_isoscalar, CouplingEntry, CouplingTable,
    IsoscalarEntry, Normalization,
};
