use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{factorial, int};
use crate::gelfand::{GelfandPattern, IrrepLabel};

fn fact(n: i64) -> BigRational {
    int(factorial(n))
}

/// `p_j = h_j + n − j` for a label of length `n`.
fn shifted(h: &[i64]) -> Vec<i64> {
    let n = h.len() as i64;
    h.iter().enumerate().map(|(j, &x)| x + n - 1 - j as i64).collect()
}

/// `A_n = ∏ p_j! / ∏_{j<k} (p_j − p_k)`.
pub fn const_a(label: &IrrepLabel) -> BigRational {
    let p = shifted(label.h());
    let num = p.iter().fold(BigInt::one(), |acc, &x| acc * factorial(x));
    let mut den = BigInt::one();
    for j in 0..p.len() {
        for k in j + 1..p.len() {
            den *= p[j] - p[k];
        }
    }
    BigRational::new(num, den)
}

fn check_branch(label: &IrrepLabel, sub: &[i64]) -> Result<()> {
    let h = label.h();
    if sub.len() + 1 != h.len() {
        return Err(Error::Structural(format!("branch row needs {} entries, got {}", h.len() - 1, sub.len())));
    }
    for i in 0..sub.len() {
        if !(h[i] >= sub[i] && sub[i] >= h[i + 1]) {
            return Err(Error::Inequality(format!(
                "branching h[{}] ≥ row[{}] ≥ h[{}] fails: {} {} {}",
                i + 1,
                i + 1,
                i + 2,
                h[i],
                sub[i],
                h[i + 1]
            )));
        }
    }
    Ok(())
}

/// Normalisation of the semi-maximal polynomial with row `n−1` equal to `sub`,
/// `p_{i,k} = h_{i,k} + k − i`:
///
/// `N = ∏_{i<n, j>i} (p_{i,n−1} − p_{j,n})! / (p_{i,n} − p_{j,n} − 1)!
///    · ∏_{i≤j<n} (p_{i,n} − p_{j,n−1} − 1)! / (p_{i,n−1} − p_{j,n−1})!`.
///
/// The squared Bargmann norm of the bare minor product is `A_n · N`.
pub fn semimax_norm(label: &IrrepLabel, sub: &[i64]) -> Result<BigRational> {
    check_branch(label, sub)?;
    let n = label.n();
    let pn = shifted(label.h());
    let pm: Vec<i64> = sub.iter().enumerate().map(|(i, &x)| x + (n - 2 - i) as i64).collect();
    let mut r = BigRational::one();
    for i in 0..n - 1 {
        for j in i + 1..n {
            r *= fact(pm[i] - pn[j]) / fact(pn[i] - pn[j] - 1);
        }
        for j in i..n - 1 {
            r *= fact(pn[i] - pm[j] - 1) / fact(pm[i] - pm[j]);
        }
    }
    Ok(r)
}

/// Same product with the second factor over `i < j` only.
pub fn semimax_norm_printed(label: &IrrepLabel, sub: &[i64]) -> Result<BigRational> {
    let corr = (0..sub.len()).fold(BigRational::one(), |acc, k| acc * fact(label.h()[k] - sub[k]));
    Ok(semimax_norm(label, sub)? / corr)
}

/// `κ² = A_{n−1}(sub) · A_n(label) · N(label, sub)`: the squared norm of the
/// U(n) polynomial produced by pairing the branching kernel with a
/// normalised U(n−1) state. Independent of the rows below `sub`.
pub fn const_branching_ratio(label: &IrrepLabel, sub: &IrrepLabel) -> Result<BigRational> {
    check_branch(label, sub.h())?;
    Ok(const_a(sub) * const_a(label) * semimax_norm(label, sub.h())?)
}

fn need_n(p: &GelfandPattern, n: usize) -> Result<()> {
    if p.n() != n {
        return Err(Error::Unsupported(format!("expected a U({n}) pattern, got U({})", p.n())));
    }
    Ok(())
}

/// `N₂² = (h12−h22+1)! / ((h11−h22)! (h12−h11)! (h12+1)! h22!)`.
pub fn n2_sq(p: &GelfandPattern) -> Result<BigRational> {
    need_n(p, 2)?;
    let (h12, h22, h11) = (p.h(1, 2), p.h(2, 2), p.h(1, 1));
    Ok(fact(h12 - h22 + 1) / (fact(h11 - h22) * fact(h12 - h11) * fact(h12 + 1) * fact(h22)))
}

/// Domain of the hypergeometric U(3) form: `h33 = 0` and `h11 ≥ h23`.
pub fn in_f21_domain(p: &GelfandPattern) -> bool {
    p.n() == 3 && p.h(3, 3) == 0 && p.h(1, 1) >= p.h(2, 3)
}

/// The U(3) normalisation as printed for the hypergeometric form.
pub fn n3_printed(p: &GelfandPattern) -> Result<BigRational> {
    need_n(p, 3)?;
    if !in_f21_domain(p) {
        return Err(Error::Unsupported(format!("pattern {p} outside h33 = 0, h11 ≥ h23")));
    }
    let (h13, h23, h12, h22, h11) = (p.h(1, 3), p.h(2, 3), p.h(1, 2), p.h(2, 2), p.h(1, 1));
    let num = fact(h11 - h22)
        * fact(h12 - h23)
        * fact(h12 - h22 + 1)
        * fact(h13 - h23 + 1)
        * fact(h12 - h11)
        * fact(h11 - h23)
        * fact(h23 - h22);
    let den = fact(h11 - h23) * fact(h12 - h22) * fact(h12 + 1) * fact(h22) * fact(h13 - h22 + 1) * fact(h13 - h12);
    Ok(num / den)
}

/// Exact squared norm of the hypergeometric sum with unit leading
/// coefficient: `[(h12−h11)! (h23−h22)! (h11−h23)!]² / N₃`.
pub fn f21_norm_sq(p: &GelfandPattern) -> Result<BigRational> {
    let n3 = n3_printed(p)?;
    let f = fact(p.h(1, 2) - p.h(1, 1)) * fact(p.h(2, 3) - p.h(2, 2)) * fact(p.h(1, 1) - p.h(2, 3));
    Ok(&f * &f / n3)
}
