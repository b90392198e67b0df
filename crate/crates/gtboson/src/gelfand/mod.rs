//! Irrep labels, Gel'fand patterns, weights, dimensions, L/R exponents and
//! the binary encoding of fundamental representations.

mod pattern;
mod word;

pub use pattern::{
    branch_rows, compare_weights, enumerate_patterns, lr_exponents, lr_exponents_of_rows, max_pattern,
    min_pattern, pattern_phi, physics_labels, semimax_pattern, validate_pattern, weight, weyl_dimension,
    GelfandPattern, IrrepLabel, LRExponents, PhysicsLabels,
};
pub use word::{enumerate_fundamental_words, phi_monomial, words_of_popcount, BinaryWord};

/// All labels of U(n) with `h_1 ≤ max`, descending.
pub fn labels_up_to(n: usize, max: i64) -> Vec<IrrepLabel> {
    let mut out = Vec::new();
    fn rec(n: usize, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<IrrepLabel>) {
        if cur.len() == n {
            out.push(IrrepLabel::new(cur.clone()).expect("non-increasing"));
            return;
        }
        for v in (0..=cap).rev() {
            cur.push(v);
            rec(n, v, cur, out);
            cur.pop();
        }
    }
    rec(n, max, &mut Vec::new(), &mut out);
    out
}
