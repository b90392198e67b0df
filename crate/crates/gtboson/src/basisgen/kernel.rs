use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{parse_ratio, ratio_string};
use crate::gelfand::{
    enumerate_patterns, lr_exponents, pattern_phi, phi_monomial, words_of_popcount, GelfandPattern,
    IrrepLabel,
};
use crate::polyengine::{bargmann_inner, parse_poly, z_minor, ExactPoly, VarId};

/// A Gel'fand basis polynomial in the `z` variables of slot 0, with its exact
/// squared Bargmann norm. The normalised vector is `poly / √norm_sq`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisPolynomial {
    pub pattern: GelfandPattern,
    pub poly: ExactPoly,
    pub norm_sq: BigRational,
}

impl BasisPolynomial {
    /// Computes the norm from the polynomial.
    pub fn new(pattern: GelfandPattern, poly: ExactPoly) -> Self {
        let norm_sq = bargmann_inner(&poly, &poly);
        BasisPolynomial { pattern, poly, norm_sq }
    }

    /// Flips the sign so the lexicographically highest monomial is positive.
    pub fn sign_normalized(mut self) -> Self {
        if self.poly.leading_term().is_some_and(|(_, c)| c.is_negative()) {
            self.poly = -self.poly;
        }
        self
    }

    /// Same normalised vector: `a = λ·b` with `λ > 0` and `|a|² = λ²|b|²`.
    pub fn same_normalized(&self, other: &BasisPolynomial) -> bool {
        let (Some((m, ca)), false) = (self.poly.leading_term(), other.poly.is_empty()) else {
            return self.poly.is_empty() && other.poly.is_empty();
        };
        let cb = other.poly.coeff(m);
        if cb.is_zero() {
            return false;
        }
        let lam = ca / &cb;
        lam.is_positive() && other.poly.scale(&lam) == self.poly && &lam * &lam * &other.norm_sq == self.norm_sq
    }

    /// The polynomial moved to the `z` variables of another slot.
    pub fn in_slot(&self, slot: u8) -> ExactPoly {
        reslot(&self.poly, slot)
    }
}

pub fn reslot(p: &ExactPoly, slot: u8) -> ExactPoly {
    p.map_vars(|v| match v {
        VarId::Z { row, col, .. } => VarId::Z { slot, row, col },
        VarId::X { l, m, .. } => VarId::X { slot, l, m },
        VarId::Y { l, m, .. } => VarId::Y { slot, l, m },
    })
}

#[derive(Serialize, Deserialize)]
struct BasisWire {
    pattern: GelfandPattern,
    poly: String,
    norm_sq: String,
}

impl Serialize for BasisPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BasisWire { pattern: self.pattern.clone(), poly: self.poly.to_string(), norm_sq: ratio_string(&self.norm_sq) }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BasisPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = BasisWire::deserialize(d)?;
        let poly = parse_poly(&w.poly).map_err(serde::de::Error::custom)?;
        let norm_sq = parse_ratio(&w.norm_sq).map_err(serde::de::Error::custom)?;
        Ok(BasisPolynomial { pattern: w.pattern, poly, norm_sq })
    }
}

/// `Σ_{|w|=k, w ⊂ [m]} φ_w Δ_w` over the `m`-bit words, optionally with
/// column `m+1` appended to every minor (and `k−1` ones in `w`).
fn fundamental_sum(m: usize, k: usize, with_last: bool, slot: u8) -> ExactPoly {
    if with_last && k == 1 {
        return z_minor(slot, &[m + 1]).expect("valid column");
    }
    let ones = if with_last { k - 1 } else { k };
    let mut s = ExactPoly::zero();
    for w in words_of_popcount(m, ones) {
        let mut cols = w.columns();
        if with_last {
            cols.push(m + 1);
        }
        let minor = z_minor(slot, &cols).expect("valid columns");
        s += &minor.mul_monomial(&phi_monomial(&w, slot));
    }
    s
}

fn exponent(e: i64) -> Result<u32> {
    u32::try_from(e).map_err(|_| Error::Inequality(format!("negative kernel exponent {e}")))
}

/// Branching kernel of U(n) ⊃ U(n−1) with the U(n−1) parameters of `slot`:
/// `∏_{k<n} A_k^{R_n^k} ∏_{k≤n} B_k^{L_n^k}`, where
/// `A_k = Σ φ_w Δ_w` over `k`-subsets of `[n−1]` and
/// `B_k = Σ φ_w Δ_{w∪{n}}` over `(k−1)`-subsets.
pub fn branching_kernel(label: &IrrepLabel, row: &[i64], slot: u8) -> Result<ExactPoly> {
    let n = label.n();
    let h = label.h();
    if row.len() + 1 != n {
        return Err(Error::Structural(format!("branch row needs {} entries", n - 1)));
    }
    let mut k_poly = ExactPoly::one();
    for k in 1..n {
        let r = exponent(row[k - 1] - h[k])?;
        if r > 0 {
            k_poly = &k_poly * &fundamental_sum(n - 1, k, false, slot).pow(r);
        }
    }
    for k in 1..=n {
        let l = exponent(if k < n { h[k - 1] - row[k - 1] } else { h[n - 1] })?;
        if l > 0 {
            k_poly = &k_poly * &fundamental_sum(n - 1, k, true, slot).pow(l);
        }
    }
    Ok(k_poly)
}

fn is_param(v: &VarId) -> bool {
    v.is_param()
}

type Memo = RwLock<HashMap<GelfandPattern, BasisPolynomial>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// All patterns sharing the top two rows, from one kernel expansion.
fn fill_branch(label: &IrrepLabel, row: &[i64]) -> Result<Vec<BasisPolynomial>> {
    let kernel = branching_kernel(label, row, 0)?;
    let sub = IrrepLabel::new(row.to_vec())?;
    let mut out = Vec::new();
    for lower in enumerate_patterns(&sub) {
        let mut rows = vec![label.h().to_vec()];
        rows.extend(lower.rows().iter().cloned());
        let pattern = GelfandPattern::new(rows)?;
        let poly = kernel.extract_coefficient(&pattern_phi(&lower, 0), is_param);
        if poly.is_empty() {
            return Err(Error::Inconsistent(format!("kernel has no term for pattern {pattern}")));
        }
        out.push(BasisPolynomial::new(pattern, poly).sign_normalized());
    }
    Ok(out)
}

/// Gel'fand polynomial of `pattern` from the branching kernel: the
/// coefficient of the lower pattern's φ-monomial, sign-normalised.
/// U(1) patterns give `z[1,1]^{h11}`. Results are memoised.
pub fn basis_from_branching(pattern: &GelfandPattern) -> Result<BasisPolynomial> {
    if pattern.n() > 4 {
        return Err(Error::Unsupported(format!("basis construction is limited to n ≤ 4, got {}", pattern.n())));
    }
    if let Some(b) = memo().read().expect("memo lock").get(pattern) {
        return Ok(b.clone());
    }
    if pattern.n() == 1 {
        let e = exponent(pattern.h(1, 1))?;
        let poly = ExactPoly::var(VarId::z(0, 1, 1)).pow(e);
        return Ok(BasisPolynomial::new(pattern.clone(), poly));
    }
    let label = pattern.label();
    let fresh = fill_branch(&label, pattern.row(pattern.n() - 1))?;
    let mut m = memo().write().expect("memo lock");
    for b in fresh {
        m.entry(b.pattern.clone()).or_insert(b);
    }
    Ok(m.get(pattern).cloned().expect("pattern was just filled"))
}

/// Basis of a whole irrep in canonical pattern order.
pub fn basis_set(label: &IrrepLabel) -> Result<Vec<BasisPolynomial>> {
    if label.n() == 1 {
        return Ok(vec![basis_from_branching(&GelfandPattern::new(vec![label.h().to_vec()])?)?]);
    }
    let mut out = Vec::new();
    for p in enumerate_patterns(label) {
        out.push(basis_from_branching(&p)?);
    }
    Ok(out)
}

/// Bare semi-maximal minor product
/// `∏_{k<n} Δ_{1..k}^{R_n^k} ∏_{k≤n} Δ_{1..k−1,n}^{L_n^k}`.
pub fn semimax_poly(label: &IrrepLabel, sub: &[i64]) -> Result<ExactPoly> {
    let rows = crate::gelfand::semimax_pattern(label, sub)?;
    let lr = lr_exponents(&rows);
    let n = label.n();
    let mut p = ExactPoly::one();
    for k in 1..n {
        let cols: Vec<usize> = (1..=k).collect();
        p = &p * &z_minor(0, &cols)?.pow(exponent(lr.r(n, k))?);
    }
    for k in 1..=n {
        let mut cols: Vec<usize> = (1..k).collect();
        cols.push(n);
        p = &p * &z_minor(0, &cols)?.pow(exponent(lr.l(n, k))?);
    }
    Ok(p)
}
