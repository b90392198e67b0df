use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::factorial;
use crate::polyengine::{Monomial, VarId};

/// Highest weight `[h_1 … h_n]` of a U(n) irrep, non-increasing and `≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrrepLabel {
    h: Vec<i64>,
}

impl IrrepLabel {
    pub fn new(h: Vec<i64>) -> Result<Self> {
        if h.is_empty() {
            return Err(Error::Structural("label must have at least one entry".into()));
        }
        for i in 0..h.len() - 1 {
            if h[i] < h[i + 1] {
                return Err(Error::Inequality(format!(
                    "h[{}] ≥ h[{}] fails: {} < {}",
                    i + 1,
                    i + 2,
                    h[i],
                    h[i + 1]
                )));
            }
        }
        if let Some(&last) = h.last() {
            if last < 0 {
                return Err(Error::Inequality(format!("h[{}] ≥ 0 fails: {last}", h.len())));
            }
        }
        Ok(IrrepLabel { h })
    }

    pub fn n(&self) -> usize {
        self.h.len()
    }

    pub fn h(&self) -> &[i64] {
        &self.h
    }

    /// `h_i`, 1-based.
    pub fn get(&self, i: usize) -> i64 {
        self.h[i - 1]
    }

    pub fn total(&self) -> i64 {
        self.h.iter().sum()
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.h.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Serialize for IrrepLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.h.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IrrepLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        IrrepLabel::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// Checks the triangle shape only.
fn check_shape(rows: &[Vec<i64>]) -> Result<()> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::Structural("pattern has no rows".into()));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n - i {
            return Err(Error::Structural(format!(
                "row {} has {} entries, expected {}",
                i + 1,
                row.len(),
                n - i
            )));
        }
    }
    Ok(())
}

/// First betweenness failure, named with the `h_{i,k}` indices.
fn betweenness_violation(rows: &[Vec<i64>]) -> Option<String> {
    let n = rows.len();
    if let Some(label_err) = IrrepLabel::new(rows[0].clone()).err() {
        return Some(label_err.to_string());
    }
    for t in 1..n {
        let (upper, lower) = (&rows[t - 1], &rows[t]);
        let k = n - t + 1;
        for i in 0..lower.len() {
            if upper[i] < lower[i] {
                return Some(format!(
                    "h_{{{},{}}} ≥ h_{{{},{}}} fails: {} < {}",
                    i + 1,
                    k,
                    i + 1,
                    k - 1,
                    upper[i],
                    lower[i]
                ));
            }
            if lower[i] < upper[i + 1] {
                return Some(format!(
                    "h_{{{},{}}} ≥ h_{{{},{}}} fails: {} < {}",
                    i + 1,
                    k - 1,
                    i + 2,
                    k,
                    lower[i],
                    upper[i + 1]
                ));
            }
        }
    }
    None
}

/// True iff every betweenness inequality holds. Malformed triangles are an
/// error rather than `false`.
pub fn validate_pattern(rows: &[Vec<i64>]) -> Result<bool> {
    check_shape(rows)?;
    Ok(betweenness_violation(rows).is_none())
}

/// Gel'fand–Tsetlin pattern. `rows[0]` is the top row (length `n`), the
/// last row has one entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GelfandPattern {
    rows: Vec<Vec<i64>>,
}

impl GelfandPattern {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        check_shape(&rows)?;
        if let Some(msg) = betweenness_violation(&rows) {
            return Err(Error::Inequality(msg));
        }
        Ok(GelfandPattern { rows })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// `h_{i,k}`: entry `i` of the row with `k` entries, both 1-based.
    pub fn h(&self, i: usize, k: usize) -> i64 {
        self.rows[self.n() - k][i - 1]
    }

    /// The row with `k` entries.
    pub fn row(&self, k: usize) -> &[i64] {
        &self.rows[self.n() - k]
    }

    pub fn label(&self) -> IrrepLabel {
        IrrepLabel { h: self.rows[0].clone() }
    }

    /// The pattern with the top row removed, a U(n−1) pattern.
    pub fn lower(&self) -> Option<GelfandPattern> {
        (self.n() > 1).then(|| GelfandPattern { rows: self.rows[1..].to_vec() })
    }

    /// Shift every entry by `d`; used to strip determinant powers.
    pub fn shifted(&self, d: i64) -> Result<GelfandPattern> {
        GelfandPattern::new(self.rows.iter().map(|r| r.iter().map(|x| x + d).collect()).collect())
    }

    /// Text form `2,1,0;2,1;2`.
    pub fn to_compact(&self) -> String {
        self.rows
            .iter()
            .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn parse_compact(s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|r| {
                r.split(',')
                    .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad pattern entry {x:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        GelfandPattern::new(rows)
    }
}

impl fmt::Display for GelfandPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact())
    }
}

#[derive(Serialize, Deserialize)]
struct PatternWire {
    n: usize,
    rows: Vec<Vec<i64>>,
}

impl Serialize for GelfandPattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PatternWire { n: self.n(), rows: self.rows.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GelfandPattern {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = PatternWire::deserialize(d)?;
        if w.n != w.rows.len() {
            return Err(serde::de::Error::custom(format!("n = {} but {} rows", w.n, w.rows.len())));
        }
        GelfandPattern::new(w.rows).map_err(serde::de::Error::custom)
    }
}

/// All rows `r` with `top[i] ≥ r[i] ≥ top[i+1]`, lexicographically descending.
pub fn branch_rows(top: &[i64]) -> Vec<Vec<i64>> {
    let k = top.len() - 1;
    let mut out = Vec::new();
    let mut cur = vec![0i64; k];
    fn rec(top: &[i64], i: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        let mut v = top[i];
        while v >= top[i + 1] {
            cur[i] = v;
            rec(top, i + 1, cur, out);
            v -= 1;
        }
    }
    rec(top, 0, &mut cur, &mut out);
    out
}

/// All patterns of `label`, lexicographically descending on the rows read
/// top to bottom, left to right.
pub fn enumerate_patterns(label: &IrrepLabel) -> Vec<GelfandPattern> {
    fn rec(prefix: &mut Vec<Vec<i64>>, out: &mut Vec<GelfandPattern>) {
        let last = prefix.last().expect("non-empty prefix").clone();
        if last.len() == 1 {
            out.push(GelfandPattern { rows: prefix.clone() });
            return;
        }
        for row in branch_rows(&last) {
            prefix.push(row);
            rec(prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![label.h.clone()], &mut out);
    out
}

/// Weyl dimension `∏_{i<j}(p_i − p_j) / ∏_{k<n} k!` with `p_i = h_i + n − i`.
pub fn weyl_dimension(label: &IrrepLabel) -> BigInt {
    let n = label.n();
    let p: Vec<i64> = (0..n).map(|i| label.h[i] + (n - 1 - i) as i64).collect();
    let mut num = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= p[i] - p[j];
        }
    }
    let den = (1..n as i64).fold(BigInt::one(), |acc, k| acc * factorial(k));
    num / den
}

/// `ω_i = Σ row_i − Σ row_{i−1}`, where `row_k` has `k` entries.
pub fn weight(p: &GelfandPattern) -> Vec<i64> {
    let sums: Vec<i64> = (0..=p.n()).map(|k| if k == 0 { 0 } else { p.row(k).iter().sum() }).collect();
    (1..=p.n()).map(|i| sums[i] - sums[i - 1]).collect()
}

/// Weight order: `a > b` when the first non-zero entry of `a − b` is positive.
pub fn compare_weights(a: &[i64], b: &[i64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

pub fn max_pattern(label: &IrrepLabel) -> GelfandPattern {
    let n = label.n();
    GelfandPattern { rows: (0..n).map(|t| label.h[..n - t].to_vec()).collect() }
}

/// `h_{r,s} = h_{r+n−s,n}`.
pub fn min_pattern(label: &IrrepLabel) -> GelfandPattern {
    let n = label.n();
    GelfandPattern { rows: (0..n).map(|t| label.h[t..].to_vec()).collect() }
}

/// Row `n−1` fixed to `sub`, everything below copied down from it.
pub fn semimax_pattern(label: &IrrepLabel, sub: &[i64]) -> Result<GelfandPattern> {
    let n = label.n();
    if n < 2 || sub.len() != n - 1 {
        return Err(Error::Structural(format!("branch row must have {} entries", n.saturating_sub(1))));
    }
    let mut rows = vec![label.h.clone()];
    rows.extend((0..n - 1).map(|t| sub[..n - 1 - t].to_vec()));
    GelfandPattern::new(rows)
}

/// `L_λ^μ` for `1 ≤ μ ≤ λ ≤ n` and `R_λ^μ` for `1 ≤ μ < λ`.
///
/// `L_λ^μ = h_{μ,λ} − h_{μ,λ−1}` and `R_λ^μ = h_{μ,λ−1} − h_{μ+1,λ}` for
/// `μ < λ`; the diagonal entry is `L_λ^λ = h_{λ,λ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LRExponents {
    l: Vec<Vec<i64>>,
    r: Vec<Vec<i64>>,
}

impl LRExponents {
    pub fn n(&self) -> usize {
        self.l.len()
    }

    pub fn l(&self, lambda: usize, mu: usize) -> i64 {
        self.l[lambda - 1][mu - 1]
    }

    pub fn r(&self, lambda: usize, mu: usize) -> i64 {
        self.r[lambda - 1][mu - 1]
    }

    /// All off-diagonal entries are non-negative.
    pub fn all_nonnegative(&self) -> bool {
        (2..=self.n()).all(|lam| (1..lam).all(|mu| self.l(lam, mu) >= 0 && self.r(lam, mu) >= 0))
    }
}

/// L/R exponents of raw rows; entries may be negative for invalid rows.
pub fn lr_exponents_of_rows(rows: &[Vec<i64>]) -> Result<LRExponents> {
    check_shape(rows)?;
    let n = rows.len();
    let h = |i: usize, k: usize| rows[n - k][i - 1];
    let mut l = Vec::with_capacity(n);
    let mut r = Vec::with_capacity(n);
    for lam in 1..=n {
        let mut lrow: Vec<i64> = (1..lam).map(|mu| h(mu, lam) - h(mu, lam - 1)).collect();
        lrow.push(h(lam, lam));
        l.push(lrow);
        r.push((1..lam).map(|mu| h(mu, lam - 1) - h(mu + 1, lam)).collect());
    }
    Ok(LRExponents { l, r })
}

pub fn lr_exponents(p: &GelfandPattern) -> LRExponents {
    lr_exponents_of_rows(&p.rows).expect("pattern has a valid shape")
}

/// `∏_{λ=2..n} ∏_{μ<λ} x(λ,μ)^{L_λ^μ} y(λ,μ)^{R_λ^μ}` in the given slot.
pub fn pattern_phi(p: &GelfandPattern, slot: u8) -> Monomial {
    let lr = lr_exponents(p);
    let mut pairs = Vec::new();
    for lam in 2..=p.n() {
        for mu in 1..lam {
            pairs.push((VarId::x(slot, lam, mu), lr.l(lam, mu) as u32));
            pairs.push((VarId::y(slot, lam, mu), lr.r(lam, mu) as u32));
        }
    }
    Monomial::from_pairs(pairs)
}

/// Physics quantum numbers of a U(2) or U(3) pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PhysicsLabels {
    Su2 { j: BigRational, m: BigRational },
    Su3 { i: BigRational, i3: BigRational, y: BigRational, b: BigRational },
}

fn half(n: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(2))
}

/// SU(2): `2j = h12 − h22`, `m = h11 − (h12 + h22)/2`.
/// SU(3): `B = (h13+h23+h33)/3`, `Y = h12 + h22 − 2B`, `I = (h12 − h22)/2`,
/// `I3 = h11 − (h12 + h22)/2`.
pub fn physics_labels(p: &GelfandPattern) -> Result<PhysicsLabels> {
    let su2 = |h12: i64, h22: i64, h11: i64| (half(h12 - h22), half(2 * h11 - h12 - h22));
    match p.n() {
        2 => {
            let (j, m) = su2(p.h(1, 2), p.h(2, 2), p.h(1, 1));
            Ok(PhysicsLabels::Su2 { j, m })
        }
        3 => {
            let (i, i3) = su2(p.h(1, 2), p.h(2, 2), p.h(1, 1));
            let b = BigRational::new(BigInt::from(p.row(3).iter().sum::<i64>()), BigInt::from(3));
            let y = BigRational::from_integer(BigInt::from(p.h(1, 2) + p.h(2, 2))) - &b - &b;
            Ok(PhysicsLabels::Su3 { i, i3, y, b })
        }
        n => Err(Error::Unsupported(format!("physics labels exist for n = 2, 3, not {n}"))),
    }
}

impl PhysicsLabels {
    pub fn is_trivial(&self) -> bool {
        match self {
            PhysicsLabels::Su2 { j, m } => j.is_zero() && m.is_zero(),
            PhysicsLabels::Su3 { i, i3, y, .. } => i.is_zero() && i3.is_zero() && y.is_zero(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(h: &[i64]) -> IrrepLabel {
        IrrepLabel::new(h.to_vec()).unwrap()
    }

    fn pat(rows: &[&[i64]]) -> GelfandPattern {
        GelfandPattern::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(validate_pattern(&[vec![2, 1, 0], vec![2, 1], vec![1]]).unwrap());
        assert!(!validate_pattern(&[vec![2, 1, 0], vec![2, 2], vec![2]]).unwrap());
        assert!(validate_pattern(&[vec![1, 0], vec![1]]).unwrap());
        assert!(validate_pattern(&[vec![1, 0], vec![1, 0]]).is_err());
        let err = GelfandPattern::new(vec![vec![2, 1, 0], vec![2, 2], vec![2]]).unwrap_err();
        assert!(err.to_string().contains("h_{2,2}"), "{err}");
    }

    #[test]
    fn label_rejections_name_the_inequality() {
        let e = IrrepLabel::new(vec![1, 2]).unwrap_err();
        assert!(e.to_string().contains("h[1] ≥ h[2]"));
        let e = IrrepLabel::new(vec![0, -1]).unwrap_err();
        assert!(e.to_string().contains("h[2] ≥ 0"));
    }

    #[test]
    fn counts_and_dimensions() {
        assert_eq!(enumerate_patterns(&lab(&[1, 0, 0])).len(), 3);
        assert_eq!(enumerate_patterns(&lab(&[2, 1, 0])).len(), 8);
        assert_eq!(enumerate_patterns(&lab(&[0, 0])).len(), 1);
        assert_eq!(weyl_dimension(&lab(&[1, 0, 0])), BigInt::from(3));
        assert_eq!(weyl_dimension(&lab(&[2, 1, 0])), BigInt::from(8));
        assert_eq!(weyl_dimension(&lab(&[0, 0, 0, 0])), BigInt::from(1));
    }

    #[test]
    fn canonical_order_is_descending() {
        let ps = enumerate_patterns(&lab(&[2, 1, 0]));
        assert_eq!(ps[0], max_pattern(&lab(&[2, 1, 0])));
        for w in ps.windows(2) {
            let a: Vec<i64> = w[0].rows().concat();
            let b: Vec<i64> = w[1].rows().concat();
            assert!(a > b);
        }
    }

    #[test]
    fn weights() {
        assert_eq!(weight(&max_pattern(&lab(&[2, 1, 0]))), vec![2, 1, 0]);
        assert_eq!(weight(&pat(&[&[2, 1, 0], &[1, 0], &[0]])), vec![0, 1, 2]);
        assert_eq!(weight(&pat(&[&[1, 0], &[1]])), vec![1, 0]);
    }

    #[test]
    fn extreme_patterns() {
        let l = lab(&[2, 1, 0]);
        assert_eq!(max_pattern(&l), pat(&[&[2, 1, 0], &[2, 1], &[2]]));
        assert_eq!(min_pattern(&l), pat(&[&[2, 1, 0], &[1, 0], &[0]]));
        assert_eq!(semimax_pattern(&l, &[1, 1]).unwrap(), pat(&[&[2, 1, 0], &[1, 1], &[1]]));
        assert!(semimax_pattern(&l, &[3, 0]).is_err());
        let min = enumerate_patterns(&l).into_iter().min_by(|a, b| compare_weights(&weight(a), &weight(b))).unwrap();
        assert_eq!(min, min_pattern(&l));
    }

    #[test]
    fn lr_examples() {
        let lr = lr_exponents(&pat(&[&[2, 0], &[1]]));
        assert_eq!((lr.l(2, 1), lr.r(2, 1)), (1, 1));
        let mx = lr_exponents(&max_pattern(&lab(&[3, 1, 0])));
        assert!((2..=3).all(|l| (1..l).all(|m| mx.l(l, m) == 0)));
        let mn = lr_exponents(&min_pattern(&lab(&[3, 1, 0])));
        assert!((2..=3).all(|l| (1..l).all(|m| mn.r(l, m) == 0)));
    }

    #[test]
    fn phi_of_patterns() {
        let m = pattern_phi(&pat(&[&[2, 0], &[1]]), 0);
        assert_eq!(m.to_string(), "x(2,1) * y(2,1)");
        let m = pattern_phi(&pat(&[&[1, 0, 0], &[1, 0], &[0]]), 0);
        assert_eq!(m.to_string(), "x(2,1) * y(3,1)");
        let mx = pattern_phi(&max_pattern(&lab(&[2, 1, 0])), 0);
        assert!(mx.pairs().iter().all(|(v, _)| matches!(v, VarId::Y { .. })));
    }

    #[test]
    fn physics() {
        let r = |n, d| BigRational::new(BigInt::from(n), BigInt::from(d));
        assert_eq!(physics_labels(&pat(&[&[1, 0], &[1]])).unwrap(), PhysicsLabels::Su2 { j: r(1, 2), m: r(1, 2) });
        assert_eq!(physics_labels(&pat(&[&[1, 0], &[0]])).unwrap(), PhysicsLabels::Su2 { j: r(1, 2), m: r(-1, 2) });
        assert!(physics_labels(&pat(&[&[0, 0], &[0]])).unwrap().is_trivial());
        let q = physics_labels(&pat(&[&[1, 0, 0], &[1, 0], &[1]])).unwrap();
        assert_eq!(q, PhysicsLabels::Su3 { i: r(1, 2), i3: r(1, 2), y: r(1, 3), b: r(1, 3) });
        assert!(physics_labels(&pat(&[&[1]])).is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = pat(&[&[2, 1, 0], &[2, 0], &[1]]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"n":3,"rows":[[2,1,0],[2,0],[1]]}"#);
        assert_eq!(serde_json::from_str::<GelfandPattern>(&s).unwrap(), p);
        assert!(serde_json::from_str::<GelfandPattern>(r#"{"n":2,"rows":[[1,0],[2]]}"#).is_err());
        assert_eq!(GelfandPattern::parse_compact(&p.to_compact()).unwrap(), p);
    }
}
