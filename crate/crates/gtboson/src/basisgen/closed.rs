use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::consts::{f21_norm_sq, in_f21_domain, n2_sq};
use super::kernel::BasisPolynomial;
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, int};
use crate::gelfand::{lr_exponents, GelfandPattern};
use crate::linsys::{free_count, nonneg_solutions};
use crate::polyengine::{z_minor, ExactPoly};

fn need(p: &GelfandPattern, n: usize) -> Result<()> {
    if p.n() != n {
        return Err(Error::Unsupported(format!("expected a U({n}) pattern, got U({})", p.n())));
    }
    Ok(())
}

/// Product of minors `Δ_cols^e` with a cache of powers.
struct Minors {
    cache: HashMap<(Vec<usize>, i64), ExactPoly>,
}

impl Minors {
    fn new() -> Self {
        Minors { cache: HashMap::new() }
    }

    fn pow(&mut self, cols: &[usize], e: i64) -> ExactPoly {
        assert!(e >= 0, "negative minor power {e}");
        self.cache
            .entry((cols.to_vec(), e))
            .or_insert_with(|| z_minor(0, cols).expect("valid columns").pow(e as u32))
            .clone()
    }

    fn product(&mut self, factors: &[(&[usize], i64)]) -> ExactPoly {
        factors.iter().fold(ExactPoly::one(), |acc, (c, e)| &acc * &self.pow(c, *e))
    }
}

/// `Δ12^{h22} Δ1^{h11−h22} Δ2^{h12−h11}` with norm² `1/N₂²`.
pub fn u2_basis_closed(p: &GelfandPattern) -> Result<BasisPolynomial> {
    need(p, 2)?;
    let (h12, h22, h11) = (p.h(1, 2), p.h(2, 2), p.h(1, 1));
    let poly = Minors::new().product(&[(&[1, 2], h22), (&[1], h11 - h22), (&[2], h12 - h11)]);
    Ok(BasisPolynomial { pattern: p.clone(), poly, norm_sq: n2_sq(p)?.recip() })
}

/// Single binomial sum over `i + j = h11 − h22`:
/// `C(h12−h23, i) C(h23−h22, j) Δ1^i Δ2^{h12−h23−i} Δ3^{h13−h12}
///  Δ12^{h22−h33} Δ13^j Δ23^{h23−h22−j} Δ123^{h33}`.
pub fn u3_basis_closed(p: &GelfandPattern) -> Result<BasisPolynomial> {
    need(p, 3)?;
    let h = |i, k| p.h(i, k);
    let mut mins = Minors::new();
    let mut poly = ExactPoly::zero();
    let s = h(1, 1) - h(2, 2);
    for i in 0..=s {
        let j = s - i;
        let c = binomial(h(1, 2) - h(2, 3), i) * binomial(h(2, 3) - h(2, 2), j);
        if c.is_zero() {
            continue;
        }
        let t = mins.product(&[
            (&[1], i),
            (&[2], h(1, 2) - h(2, 3) - i),
            (&[3], h(1, 3) - h(1, 2)),
            (&[1, 2], h(2, 2) - h(3, 3)),
            (&[1, 3], j),
            (&[2, 3], h(2, 3) - h(2, 2) - j),
            (&[1, 2, 3], h(3, 3)),
        ]);
        poly += &t.scale(&int(c));
    }
    Ok(BasisPolynomial::new(p.clone(), poly).sign_normalized())
}

/// Rising factorial `(a)_k`.
fn rising(a: i64, k: i64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, t| acc * (a + t))
}

/// Terminating `₂F₁` form, for `h33 = 0` and `h11 ≥ h23`:
/// `Σ_k (a)_k (b)_k / ((c)_k k!) Δ12^{h22} Δ13^{h23−h22−k} Δ1^{h11−h23+k}
///  Δ2^{h12−h11−k} Δ3^{h13−h12} Δ23^k` with `a = h22−h23`, `b = h11−h12`,
/// `c = h11−h23+1`. The norm² is the closed value, not a Bargmann sum.
pub fn u3_basis_f21(p: &GelfandPattern) -> Result<BasisPolynomial> {
    need(p, 3)?;
    if !in_f21_domain(p) {
        return Err(Error::Unsupported(format!("pattern {p} outside h33 = 0, h11 ≥ h23")));
    }
    let h = |i, k| p.h(i, k);
    let (a, b, c) = (h(2, 2) - h(2, 3), h(1, 1) - h(1, 2), h(1, 1) - h(2, 3) + 1);
    let kmax = (h(2, 3) - h(2, 2)).min(h(1, 2) - h(1, 1));
    let mut mins = Minors::new();
    let mut poly = ExactPoly::zero();
    for k in 0..=kmax {
        let coef = BigRational::new(rising(a, k) * rising(b, k), rising(c, k) * factorial(k));
        let t = mins.product(&[
            (&[1, 2], h(2, 2)),
            (&[1, 3], h(2, 3) - h(2, 2) - k),
            (&[1], h(1, 1) - h(2, 3) + k),
            (&[2], h(1, 2) - h(1, 1) - k),
            (&[3], h(1, 3) - h(1, 2)),
            (&[2, 3], k),
        ]);
        poly += &t.scale(&coef);
    }
    Ok(BasisPolynomial { pattern: p.clone(), poly, norm_sq: f21_norm_sq(p)? })
}

/// Index names of the U(4) system, in column order.
pub const U4_INDEX_NAMES: [&str; 12] = ["k1", "k", "i", "i1", "l1", "l", "m1", "m", "j", "j1", "n1", "n"];

/// Columns of the minor each index powers.
const U4_MINORS: [&[usize]; 12] =
    [&[1], &[2], &[3], &[1, 2], &[1, 3], &[2, 3], &[1, 4], &[2, 4], &[3, 4], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]];

/// Linear constraints on the twelve U(4) indices: six parameter-degree
/// equations followed by the four multinomial sums.
pub fn u4_index_system(p: &GelfandPattern) -> Result<(Vec<Vec<i64>>, Vec<i64>)> {
    need(p, 4)?;
    let lr = lr_exponents(p);
    let row = |idx: &[usize]| {
        let mut r = vec![0i64; 12];
        for &i in idx {
            r[i] = 1;
        }
        r
    };
    let a = vec![
        row(&[2, 8]),
        row(&[0, 1, 6, 7]),
        row(&[4, 5, 10, 11]),
        row(&[3, 9]),
        row(&[1, 5, 7, 11]),
        row(&[0, 4, 6, 10]),
        row(&[0, 1, 2]),
        row(&[3, 4, 5]),
        row(&[6, 7, 8]),
        row(&[9, 10, 11]),
    ];
    let b = vec![
        lr.l(3, 1),
        lr.r(3, 1),
        lr.l(3, 2),
        lr.r(3, 2),
        lr.l(2, 1),
        lr.r(2, 1),
        lr.r(4, 1),
        lr.r(4, 2),
        lr.l(4, 2),
        lr.l(4, 3),
    ];
    Ok((a, b))
}

/// Unknowns left free by the U(4) index system.
pub fn u4_free_count(p: &GelfandPattern) -> Result<usize> {
    Ok(free_count(&u4_index_system(p)?.0))
}

/// The U(4) polynomial as a sum over solutions of the index system:
/// `Σ a1! a2! b2! b3! / ∏ idx! · ∏ Δ^{idx} · Δ123^{R43} Δ4^{L41} Δ1234^{h44}`.
pub fn u4_basis_closed(p: &GelfandPattern) -> Result<BasisPolynomial> {
    let (a, b) = u4_index_system(p)?;
    let lr = lr_exponents(p);
    let top = factorial(b[6]) * factorial(b[7]) * factorial(b[8]) * factorial(b[9]);
    let mut mins = Minors::new();
    let fixed = mins.product(&[(&[1, 2, 3], lr.r(4, 3)), (&[4], lr.l(4, 1)), (&[1, 2, 3, 4], lr.l(4, 4))]);
    let mut poly = ExactPoly::zero();
    for sol in nonneg_solutions(&a, &b)? {
        let den = sol.iter().fold(BigInt::one(), |acc, &x| acc * factorial(x));
        let factors: Vec<(&[usize], i64)> = U4_MINORS.iter().copied().zip(sol.iter().copied()).collect();
        let t = mins.product(&factors);
        poly += &t.scale(&BigRational::new(top.clone(), den));
    }
    let poly = &poly * &fixed;
    Ok(BasisPolynomial::new(p.clone(), poly).sign_normalized())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basisgen::basis_from_branching;
    use crate::gelfand::{enumerate_patterns, labels_up_to, IrrepLabel};
    use crate::polyengine::bargmann_inner;

    fn lab(h: &[i64]) -> IrrepLabel {
        IrrepLabel::new(h.to_vec()).unwrap()
    }

    #[test]
    fn u2_matches_oracle() {
        for l in labels_up_to(2, 4) {
            for p in enumerate_patterns(&l) {
                let c = u2_basis_closed(&p).unwrap();
                assert_eq!(bargmann_inner(&c.poly, &c.poly), c.norm_sq, "{p}");
                assert!(c.same_normalized(&basis_from_branching(&p).unwrap()), "{p}");
            }
        }
    }

    #[test]
    fn u3_single_sum_examples() {
        let p = GelfandPattern::new(vec![vec![2, 1, 0], vec![2, 1], vec![2]]).unwrap();
        assert_eq!(u3_basis_closed(&p).unwrap().poly.len(), 2);
        let p = GelfandPattern::new(vec![vec![1, 0, 0], vec![1, 0], vec![0]]).unwrap();
        assert_eq!(u3_basis_closed(&p).unwrap().poly.to_string(), "1 * z[1,2]");
    }

    #[test]
    fn u3_forms_match_oracle() {
        for l in labels_up_to(3, 3) {
            for p in enumerate_patterns(&l) {
                let o = basis_from_branching(&p).unwrap();
                assert!(u3_basis_closed(&p).unwrap().same_normalized(&o), "{p}");
                if in_f21_domain(&p) {
                    let f = u3_basis_f21(&p).unwrap();
                    assert_eq!(bargmann_inner(&f.poly, &f.poly), f.norm_sq, "{p}");
                    assert!(f.clone().sign_normalized().same_normalized(&o), "{p}");
                }
            }
        }
    }

    #[test]
    fn u4_matches_oracle() {
        for h in [[1, 1, 0, 0], [2, 1, 0, 0], [1, 0, 0, 0], [2, 1, 1, 0]] {
            for p in enumerate_patterns(&lab(&h)) {
                assert_eq!(u4_free_count(&p).unwrap(), 5);
                let c = u4_basis_closed(&p).unwrap();
                assert!(c.same_normalized(&basis_from_branching(&p).unwrap()), "{p}");
            }
        }
    }
}
