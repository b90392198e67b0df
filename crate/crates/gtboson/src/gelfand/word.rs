use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::polyengine::{Monomial, VarId};

use super::pattern::GelfandPattern;

/// An `n`-bit word with at least one set bit, leftmost bit = column 1.
///
/// The ones mark the columns of the minor `Δ^{1..k}_{i1..ik}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWord {
    bits: Vec<bool>,
}

impl BinaryWord {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::Structural("empty word".into()));
        }
        if !bits.iter().any(|&b| b) {
            return Err(Error::Structural("the all-zero word encodes no minor".into()));
        }
        Ok(BinaryWord { bits })
    }

    /// Word with ones at the given 1-based columns.
    pub fn from_columns(n: usize, cols: &[usize]) -> Result<Self> {
        let mut bits = vec![false; n];
        for &c in cols {
            if c == 0 || c > n {
                return Err(Error::Structural(format!("column {c} outside 1..={n}")));
            }
            bits[c - 1] = true;
        }
        BinaryWord::new(bits)
    }

    pub fn n(&self) -> usize {
        self.bits.len()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn popcount(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// 1-based columns of the ones.
    pub fn columns(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.bits[i - 1]).collect()
    }

    pub fn is_all_ones(&self) -> bool {
        self.bits.iter().all(|&b| b)
    }

    /// Bitwise complement; the all-ones word has none.
    pub fn complement(&self) -> Result<BinaryWord> {
        if self.is_all_ones() {
            return Err(Error::Vacuum);
        }
        Ok(BinaryWord { bits: self.bits.iter().map(|b| !b).collect() })
    }

    /// The pattern of the word inside its fundamental representation: the row
    /// with `k` entries has as many ones as the first `k` bits.
    pub fn pattern(&self) -> GelfandPattern {
        let n = self.n();
        let rows = (0..n)
            .map(|t| {
                let k = n - t;
                let ones = self.bits[..k].iter().filter(|&&b| b).count();
                (0..k).map(|i| i64::from(i < ones)).collect()
            })
            .collect();
        GelfandPattern::new(rows).expect("word patterns are valid")
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse(format!("bad bit {c:?} in word {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        BinaryWord::new(bits)
    }
}

impl serde::Serialize for BinaryWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for BinaryWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// All `2^n − 1` words, grouped by popcount `1..=n`, lexicographically
/// descending inside a group.
pub fn enumerate_fundamental_words(n: usize) -> Vec<BinaryWord> {
    (1..=n).flat_map(|k| words_of_popcount(n, k)).collect()
}

/// The `C(n,k)` words of one fundamental representation, descending.
pub fn words_of_popcount(n: usize, k: usize) -> Vec<BinaryWord> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, k: usize, cur: &mut Vec<bool>, out: &mut Vec<BinaryWord>) {
        let ones = cur.iter().filter(|&&b| b).count();
        if cur.len() == n {
            if ones == k {
                out.push(BinaryWord { bits: cur.clone() });
            }
            return;
        }
        let left = n - cur.len();
        for b in [true, false] {
            let ones_after = ones + usize::from(b);
            if ones_after <= k && ones_after + left > k {
                cur.push(b);
                rec(n, k, cur, out);
                cur.pop();
            }
        }
    }
    if k >= 1 && k <= n {
        rec(n, k, &mut cur, &mut out);
    }
    out
}

/// Parameter monomial of a word in the given slot.
///
/// A zero at position `λ` after the first one gives `y(λ, #ones before)`;
/// a one at position `λ` after the first zero gives `x(λ, 1 + #ones before)`.
pub fn phi_monomial(w: &BinaryWord, slot: u8) -> Monomial {
    let mut pairs = Vec::new();
    let (mut ones, mut seen0) = (0usize, false);
    for (i, &b) in w.bits.iter().enumerate() {
        let lam = i + 1;
        if b {
            if seen0 {
                pairs.push((VarId::x(slot, lam, ones + 1), 1));
            }
            ones += 1;
        } else {
            if ones > 0 {
                pairs.push((VarId::y(slot, lam, ones), 1));
            }
            seen0 = true;
        }
    }
    Monomial::from_pairs(pairs)
}
