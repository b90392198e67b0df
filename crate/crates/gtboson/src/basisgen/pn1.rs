use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::binomial;
use crate::gelfand::{lr_exponents, pattern_phi, phi_monomial, words_of_popcount, GelfandPattern};
use crate::polyengine::ExactPoly;

fn check(lower: &GelfandPattern) -> Result<usize> {
    let m = lower.n();
    if !(2..=4).contains(&m) {
        return Err(Error::Unsupported(format!("P_n(1) needs n ∈ {{3,4,5}}, got n = {}", m + 1)));
    }
    Ok(m)
}

/// `e_k = h_{k,n−1} − h_{k+1,n−1}`, the power of the `k`-th fundamental sum.
fn powers(lower: &GelfandPattern) -> Vec<i64> {
    let top = lower.row(lower.n());
    top.windows(2).map(|w| w[0] - w[1]).collect()
}

/// Coefficient of the lower pattern's φ-monomial in
/// `∏_{k=1}^{n−2} (Σ_{|w|=k} φ_w)^{e_k}`, by full expansion. `lower` is the
/// U(n−1) part of the pattern (rows `n−1` down to 1).
pub fn pn1_bruteforce(lower: &GelfandPattern) -> Result<BigInt> {
    let m = check(lower)?;
    let mut prod = ExactPoly::one();
    for (k, &e) in (1..m).zip(powers(lower).iter()) {
        let mut s = ExactPoly::default();
        for w in words_of_popcount(m, k) {
            s += &ExactPoly::monomial(phi_monomial(&w, 0));
        }
        prod = &prod * &s.pow(e as u32);
    }
    let c = prod.coeff(&pattern_phi(lower, 0));
    Ok(c.to_integer())
}

/// Products of binomials in the L/R exponents of the lower pattern:
///
/// - `P₃ = C(e1, L21)`
/// - `P₄ = C(e1, L31) C(e2, L32) C(R31+L32, L21)`
/// - `P₅ = C(e1, L41) C(e2, L42) C(e3, L43) · C(R41+L42, L31) C(R42+L43, L32) C(R31+L32, L21)`
pub fn pn1_closed(lower: &GelfandPattern) -> Result<BigInt> {
    let m = check(lower)?;
    let e = powers(lower);
    let lr = lr_exponents(lower);
    let (l, r) = (|a, b| lr.l(a, b), |a, b| lr.r(a, b));
    let mut acc = BigInt::one();
    for k in 1..m {
        acc *= binomial(e[k - 1], l(m, k));
    }
    for lam in (2..m).rev() {
        for mu in 1..lam {
            acc *= binomial(r(lam + 1, mu) + l(lam + 1, mu + 1), l(lam, mu));
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gelfand::{enumerate_patterns, IrrepLabel};

    fn pat(rows: &[&[i64]]) -> GelfandPattern {
        GelfandPattern::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn p3_examples() {
        assert_eq!(pn1_closed(&pat(&[&[2, 0], &[1]])).unwrap(), BigInt::from(2));
        assert_eq!(pn1_bruteforce(&pat(&[&[2, 0], &[1]])).unwrap(), BigInt::from(2));
        assert_eq!(pn1_closed(&pat(&[&[3, 1], &[3]])).unwrap(), BigInt::one());
    }

    #[test]
    fn closed_equals_bruteforce_small() {
        for h in [[2, 1, 0], [3, 1, 0], [2, 2, 0]] {
            for p in enumerate_patterns(&IrrepLabel::new(h.to_vec()).unwrap()) {
                assert_eq!(pn1_closed(&p).unwrap(), pn1_bruteforce(&p).unwrap(), "{p}");
            }
        }
    }

    #[test]
    fn rejects_other_ranks() {
        assert!(pn1_closed(&pat(&[&[1]])).is_err());
    }
}
