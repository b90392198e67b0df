use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::su2::su2_threej;
use crate::error::{Error, Result};
use crate::exact::int;
use crate::gelfand::{GelfandPattern, IrrepLabel};
use crate::polyengine::{SqrtRational, SurdSum};

/// `ThreeJ`: invariant coefficients, `Σ_{p1,p2} C C' = δ/d3`.
/// `Cg`: Clebsch–Gordan, `√d3` times the invariant value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    #[serde(rename = "3j")]
    ThreeJ,
    Cg,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CouplingEntry {
    pub patterns: [GelfandPattern; 3],
    pub rho: i64,
    pub value: SqrtRational,
}

/// Non-zero coefficients of one coupling, in canonical pattern order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CouplingTable {
    pub labels: Vec<IrrepLabel>,
    pub rho_count: usize,
    pub rho_values: Vec<i64>,
    pub normalization: Normalization,
    pub entries: Vec<CouplingEntry>,
}

impl CouplingTable {
    pub fn get(&self, patterns: &[GelfandPattern; 3], rho: i64) -> SqrtRational {
        self.entries
            .iter()
            .find(|e| e.rho == rho && &e.patterns == patterns)
            .map_or_else(SqrtRational::zero, |e| e.value.clone())
    }

    fn d3(&self) -> BigRational {
        int(crate::gelfand::weyl_dimension(&self.labels[2]))
    }

    /// Rescales between the invariant and Clebsch–Gordan normalisations.
    pub fn with_normalization(&self, target: Normalization) -> CouplingTable {
        if target == self.normalization {
            return self.clone();
        }
        let f = match target {
            Normalization::Cg => SqrtRational::sqrt(self.d3()).expect("positive"),
            Normalization::ThreeJ => SqrtRational::sqrt(self.d3().recip()).expect("positive"),
        };
        let mut t = self.clone();
        t.normalization = target;
        for e in &mut t.entries {
            e.value = &e.value * &f;
        }
        t
    }

    /// Rows `pattern1,pattern2,pattern3,rho,value` with patterns in compact
    /// `a,b,c;d,e;f` form and values as `p/q*sqrt(a/b)`.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Parse(e.to_string());
        w.write_record(["pattern1", "pattern2", "pattern3", "rho", "value"]).map_err(io)?;
        for e in &self.entries {
            w.write_record([
                e.patterns[0].to_compact(),
                e.patterns[1].to_compact(),
                e.patterns[2].to_compact(),
                e.rho.to_string(),
                e.value.to_compact(),
            ])
            .map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

fn exact_sum(values: impl Iterator<Item = SqrtRational>) -> Result<BigRational> {
    let mut s = SurdSum::zero();
    for v in values {
        s.add_value(&v);
    }
    s.to_rational().ok_or_else(|| Error::Inconsistent("sum is irrational".into()))
}

/// Checks `Σ_{p1,p2} C_ρ(p1,p2,p3) C_ρ'(p1,p2,p3') = δ_{ρρ'} δ_{p3 p3'} / d3`
/// within and across the given invariant tables, which must share the
/// first two labels. Returns the number of sums checked.
pub fn check_orthogonality(tables: &[CouplingTable]) -> Result<usize> {
    let mut checked = 0;
    for (ta, a) in tables.iter().enumerate() {
        for b in &tables[ta..] {
            if a.labels[..2] != b.labels[..2] {
                return Err(Error::Structural("tables must share the first two labels".into()));
            }
            let mut sums: BTreeMap<(String, i64, String, i64), Vec<SqrtRational>> = BTreeMap::new();
            let mut keys_a = BTreeMap::new();
            let mut keys_b = BTreeMap::new();
            for e in &a.entries {
                keys_a.insert((e.patterns[2].to_compact(), e.rho), ());
            }
            for e in &b.entries {
                keys_b.insert((e.patterns[2].to_compact(), e.rho), ());
            }
            for ea in &a.entries {
                for eb in &b.entries {
                    if ea.patterns[0] == eb.patterns[0] && ea.patterns[1] == eb.patterns[1] {
                        sums.entry((ea.patterns[2].to_compact(), ea.rho, eb.patterns[2].to_compact(), eb.rho))
                            .or_default()
                            .push(&ea.value * &eb.value);
                    }
                }
            }
            let same = std::ptr::eq(a, b);
            for ka in keys_a.keys() {
                for kb in keys_b.keys() {
                    let key = (ka.0.clone(), ka.1, kb.0.clone(), kb.1);
                    let got = match sums.remove(&key) {
                        Some(v) => exact_sum(v.into_iter())?,
                        None => BigRational::zero(),
                    };
                    let want = if same && ka == kb { a.d3().recip() } else { BigRational::zero() };
                    if got != want {
                        return Err(Error::Inconsistent(format!(
                            "{} ⊗ {}: sum over ({}, ρ={}) × ({}, ρ={}) is {got}, expected {want}",
                            a.labels[0], a.labels[1], ka.0, ka.1, kb.0, kb.1
                        )));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}

/// Checks `Σ_{tables, ρ, p3} d3 C(p1,p2,p3) C(p1',p2',p3) = δ δ` over all
/// `(p1, p2)` pairs of the first two irreps; the tables must exhaust the
/// product. Returns the number of pairs checked.
pub fn check_completeness(tables: &[CouplingTable]) -> Result<usize> {
    let first = tables.first().ok_or_else(|| Error::Structural("no tables".into()))?;
    let p1s = crate::gelfand::enumerate_patterns(&first.labels[0]);
    let p2s = crate::gelfand::enumerate_patterns(&first.labels[1]);
    let mut sums: BTreeMap<(usize, usize, usize, usize), Vec<SqrtRational>> = BTreeMap::new();
    let idx = |ps: &[GelfandPattern], p: &GelfandPattern| ps.iter().position(|q| q == p).expect("pattern of label");
    for t in tables {
        let scale = SqrtRational::from_rational(t.d3());
        let mut by_p3: BTreeMap<(String, i64), Vec<&CouplingEntry>> = BTreeMap::new();
        for e in &t.entries {
            by_p3.entry((e.patterns[2].to_compact(), e.rho)).or_default().push(e);
        }
        for group in by_p3.values() {
            for ea in group {
                for eb in group {
                    let key = (idx(&p1s, &ea.patterns[0]), idx(&p2s, &ea.patterns[1]), idx(&p1s, &eb.patterns[0]), idx(&p2s, &eb.patterns[1]));
                    sums.entry(key).or_default().push(&(&ea.value * &eb.value) * &scale);
                }
            }
        }
    }
    let mut checked = 0;
    for i1 in 0..p1s.len() {
        for i2 in 0..p2s.len() {
            for j1 in 0..p1s.len() {
                for j2 in 0..p2s.len() {
                    let got = match sums.remove(&(i1, i2, j1, j2)) {
                        Some(v) => exact_sum(v.into_iter())?,
                        None => BigRational::zero(),
                    };
                    let want = if (i1, i2) == (j1, j2) { BigRational::one() } else { BigRational::zero() };
                    if got != want {
                        return Err(Error::Inconsistent(format!(
                            "completeness fails at ({}, {}) × ({}, {}): {got}",
                            p1s[i1], p2s[i2], p1s[j1], p2s[j2]
                        )));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}

/// The U(2) pattern formed by the two bottom rows of a U(3) pattern.
pub fn su2_part(p: &GelfandPattern) -> GelfandPattern {
    GelfandPattern::new(vec![p.row(2).to_vec(), p.row(1).to_vec()]).expect("sub-pattern is valid")
}

/// One isoscalar factor: the middle rows of the three patterns and `rho`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoscalarEntry {
    pub rows: [Vec<i64>; 3],
    pub rho: i64,
    pub value: SqrtRational,
}

/// `C / (SU(2) 3-j of the bottom two rows)` for every bottom-row choice with
/// a non-zero SU(2) factor; all ratios must agree. Errors if they differ or
/// if no bottom row gives a non-zero SU(2) factor.
pub fn su3_isoscalar(table: &CouplingTable, rows: [&[i64]; 3], rho: i64) -> Result<SqrtRational> {
    let mut choices: Vec<Vec<GelfandPattern>> = Vec::new();
    for s in 0..3 {
        let top = table.labels[s].h().to_vec();
        let r = rows[s];
        if r.len() != 2 {
            return Err(Error::Structural("middle rows have two entries".into()));
        }
        let mut v = Vec::new();
        for h11 in (r[1]..=r[0]).rev() {
            v.push(GelfandPattern::new(vec![top.clone(), r.to_vec(), vec![h11]])?);
        }
        choices.push(v);
    }
    let mut value: Option<SqrtRational> = None;
    for p1 in &choices[0] {
        for p2 in &choices[1] {
            for p3 in &choices[2] {
                let ps = [p1.clone(), p2.clone(), p3.clone()];
                let s = su2_threej([&su2_part(p1), &su2_part(p2), &su2_part(p3)])?;
                if s.is_zero() {
                    if !table.get(&ps, rho).is_zero() {
                        return Err(Error::Inconsistent(format!("non-zero coefficient with zero SU(2) factor at {p1} {p2} {p3}")));
                    }
                    continue;
                }
                let r = &table.get(&ps, rho) / &s;
                match &value {
                    None => value = Some(r),
                    Some(v) if *v == r => {}
                    Some(v) => {
                        return Err(Error::Inconsistent(format!("isoscalar ratio {r} at {p1} {p2} {p3} differs from {v}")))
                    }
                }
            }
        }
    }
    value.ok_or_else(|| Error::Unsupported("every SU(2) factor vanishes; isoscalar undefined".into()))
}

/// All defined isoscalar factors of a table, skipping middle-row triples
/// whose SU(2) factors all vanish. Entries with value zero are omitted.
pub fn isoscalar_table(table: &CouplingTable) -> Result<Vec<IsoscalarEntry>> {
    let mut seen = Vec::new();
    for e in &table.entries {
        let rows = [0, 1, 2].map(|s| e.patterns[s].row(2).to_vec());
        if !seen.contains(&(rows.clone(), e.rho)) {
            seen.push((rows, e.rho));
        }
    }
    let mut out = Vec::new();
    for (rows, rho) in seen {
        let v = su3_isoscalar(table, [&rows[0], &rows[1], &rows[2]], rho)?;
        if !v.is_zero() {
            out.push(IsoscalarEntry { rows, rho, value: v });
        }
    }
    Ok(out)
}
