use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::table::{CouplingEntry, CouplingTable, Normalization};
use crate::basisgen::basis_set;
use crate::error::{Error, Result};
use crate::gelfand::{enumerate_patterns, weight, GelfandPattern, IrrepLabel};
use crate::polyengine::{bargmann_inner, z_minor, ExactPoly, SqrtRational};

/// Exponents `k1..k8` of `W¹..W⁸` for one multiplicity value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KVector {
    pub rho: i64,
    pub k: [i64; 8],
}

fn check_su3(labels: &[IrrepLabel; 3]) -> Result<()> {
    if labels.iter().any(|l| l.n() != 3) {
        return Err(Error::Unsupported("SU(3) coupling needs three U(3) labels".into()));
    }
    Ok(())
}

/// `(a_s, b_s) = (h1 − h2, h2 − h3)` per slot.
fn degrees(labels: &[IrrepLabel; 3]) -> ([i64; 3], [i64; 3]) {
    let a = [0, 1, 2].map(|s| labels[s].get(1) - labels[s].get(2));
    let b = [0, 1, 2].map(|s| labels[s].get(2) - labels[s].get(3));
    (a, b)
}

/// All exponent vectors with the slot degrees of the labels, one per
/// `rho = k3`, ascending. At most one of `k7`, `k8` is non-zero.
pub fn solve_k(labels: &[IrrepLabel; 3]) -> Result<Vec<KVector>> {
    check_su3(labels)?;
    let (a, b) = degrees(labels);
    let diff = a.iter().sum::<i64>() - b.iter().sum::<i64>();
    if diff % 3 != 0 {
        return Ok(Vec::new());
    }
    let (k7, k8) = if diff >= 0 { (diff / 3, 0) } else { (0, -diff / 3) };
    let mut out = Vec::new();
    for rho in 0..=a[0].min(b[2]) {
        let k3 = rho;
        let k5 = b[2] - k8 - rho;
        let k1 = a[0] - rho - k7;
        let k6 = b[1] - k8 - k1;
        let k4 = a[2] - k6 - k7;
        let k2 = b[0] - k8 - k4;
        let k = [k1, k2, k3, k4, k5, k6, k7, k8];
        if k.iter().all(|&x| x >= 0) && k2 + k5 + k7 == a[1] {
            out.push(KVector { rho, k });
        }
    }
    Ok(out)
}

/// `v_s = (Δ1, Δ2, Δ3)` of slot `s`.
fn v(s: u8) -> [ExactPoly; 3] {
    [1, 2, 3].map(|c| z_minor(s, &[c]).expect("valid"))
}

/// `w_s = (Δ23, −Δ13, Δ12)` of slot `s`.
fn w(s: u8) -> [ExactPoly; 3] {
    [z_minor(s, &[2, 3]).expect("valid"), -z_minor(s, &[1, 3]).expect("valid"), z_minor(s, &[1, 2]).expect("valid")]
}

fn dot(a: &[ExactPoly; 3], b: &[ExactPoly; 3]) -> ExactPoly {
    let mut s = ExactPoly::zero();
    for i in 0..3 {
        s += &(&a[i] * &b[i]);
    }
    s
}

fn det3(r: [&[ExactPoly; 3]; 3]) -> ExactPoly {
    let rows: Vec<Vec<ExactPoly>> = r.iter().map(|x| x.to_vec()).collect();
    crate::polyengine::det(&rows)
}

/// The elementary invariants in the matrix variables of slots 1–3:
/// `W¹ = v1·w2`, `W² = w1·v2`, `W³ = v1·w3`, `W⁴ = v3·w1`, `W⁵ = v2·w3`,
/// `W⁶ = v3·w2`, `W⁷ = det(v1,v2,v3)`, `W⁸ = det(w1,w2,w3)`.
pub fn z_invariants() -> [ExactPoly; 8] {
    let (v1, v2, v3) = (v(1), v(2), v(3));
    let (w1, w2, w3) = (w(1), w(2), w(3));
    [
        dot(&v1, &w2),
        dot(&w1, &v2),
        dot(&v1, &w3),
        dot(&v3, &w1),
        dot(&v2, &w3),
        dot(&v3, &w2),
        det3([&v1, &v2, &v3]),
        det3([&w1, &w2, &w3]),
    ]
}

/// `∏ (W^i)^{k_i} · ∏_s det(z_s)^{h3_s}`.
pub fn invariant_poly(labels: &[IrrepLabel; 3], k: &[i64; 8]) -> ExactPoly {
    let ws = z_invariants();
    let mut p = ExactPoly::one();
    for (wi, &ki) in ws.iter().zip(k) {
        if ki > 0 {
            p = &p * &wi.pow(ki as u32);
        }
    }
    for (s, l) in labels.iter().enumerate() {
        if l.get(3) > 0 {
            p = &p * &z_minor(s as u8 + 1, &[1, 2, 3]).expect("valid").pow(l.get(3) as u32);
        }
    }
    p
}

/// Gram–Schmidt over `rho` ascending with exact rational projections;
/// dependent invariants are dropped.
fn orthogonalize(hs: Vec<(i64, ExactPoly)>) -> Vec<(i64, ExactPoly, BigRational)> {
    let mut out: Vec<(i64, ExactPoly, BigRational)> = Vec::new();
    for (rho, h) in hs {
        let mut u = h.clone();
        for (_, prev, nn) in &out {
            let c = bargmann_inner(&h, prev) / nn;
            u = u - &prev.scale(&c);
        }
        if !u.is_empty() {
            let nn = bargmann_inner(&u, &u);
            out.push((rho, u, nn));
        }
    }
    out
}

/// Pattern triples whose weights sum to a multiple of `(1,1,1)`, in
/// canonical order (slot 1 outermost).
pub fn balanced_triples(labels: &[IrrepLabel; 3]) -> Vec<[GelfandPattern; 3]> {
    let ps: Vec<Vec<GelfandPattern>> = labels.iter().map(enumerate_patterns).collect();
    let mut out = Vec::new();
    for p1 in &ps[0] {
        for p2 in &ps[1] {
            for p3 in &ps[2] {
                let w: Vec<i64> = (0..3).map(|i| weight(p1)[i] + weight(p2)[i] + weight(p3)[i]).collect();
                if w[0] == w[1] && w[1] == w[2] {
                    out.push([p1.clone(), p2.clone(), p3.clone()]);
                }
            }
        }
    }
    out
}

fn run_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// Invariant (3-j type) coupling table of three SU(3) irreps.
///
/// For each `rho` the orthogonalised invariant `U_ρ` is paired with products
/// of normalised Gel'fand polynomials:
/// `C_ρ(p1,p2,p3) = ⟨Γ_{p1} Γ_{p2} Γ_{p3}, U_ρ⟩ / ‖U_ρ‖`. The sign of each
/// `rho` is fixed by the first non-zero entry in canonical order being
/// positive. `jobs` bounds the worker threads; `None` uses rayon's default.
pub fn su3_table(labels: &[IrrepLabel; 3], jobs: Option<usize>) -> Result<CouplingTable> {
    check_su3(labels)?;
    let ks = solve_k(labels)?;
    if ks.is_empty() {
        return Err(Error::NoCoupling(format!("{} ⊗ {} ⊗ {} has no invariant", labels[0], labels[1], labels[2])));
    }
    let labels_c = labels.clone();
    let built = run_pool(jobs, move || -> Result<CouplingTable> {
        let hs: Vec<(i64, ExactPoly)> =
            ks.par_iter().map(|kv| (kv.rho, invariant_poly(&labels_c, &kv.k))).collect();
        let us = orthogonalize(hs);
        let bases: Vec<Vec<(GelfandPattern, ExactPoly, BigRational)>> = labels_c
            .iter()
            .enumerate()
            .map(|(s, l)| {
                Ok(basis_set(l)?.into_iter().map(|b| (b.pattern.clone(), b.in_slot(s as u8 + 1), b.norm_sq)).collect())
            })
            .collect::<Result<_>>()?;
        let find = |s: usize, p: &GelfandPattern| bases[s].iter().find(|b| &b.0 == p).expect("pattern in basis");
        let triples = balanced_triples(&labels_c);
        let rows: Vec<Vec<CouplingEntry>> = triples
            .par_iter()
            .map(|t| {
                let (b1, b2, b3) = (find(0, &t[0]), find(1, &t[1]), find(2, &t[2]));
                let prod = &(&b1.1 * &b2.1) * &b3.1;
                let nprod = &b1.2 * &b2.2 * &b3.2;
                us.iter()
                    .filter_map(|(rho, u, nn)| {
                        let c = bargmann_inner(&prod, u);
                        (!c.is_zero()).then(|| CouplingEntry {
                            patterns: t.clone(),
                            rho: *rho,
                            value: SqrtRational::new(c, (&nprod * nn).recip()).expect("positive"),
                        })
                    })
                    .collect()
            })
            .collect();
        let mut entries: Vec<CouplingEntry> = rows.into_iter().flatten().collect();
        for (rho, _, _) in &us {
            let first = entries.iter().find(|e| e.rho == *rho);
            if first.is_some_and(|e| e.value.q().is_negative()) {
                for e in entries.iter_mut().filter(|e| e.rho == *rho) {
                    e.value = -e.value.clone();
                }
            }
        }
        let order = |e: &CouplingEntry| triples.iter().position(|t| t == &e.patterns).expect("known triple");
        entries.sort_by_key(|e| (order(e), e.rho));
        Ok(CouplingTable {
            labels: labels_c.to_vec(),
            rho_count: us.len(),
            rho_values: us.iter().map(|u| u.0).collect(),
            normalization: Normalization::ThreeJ,
            entries,
        })
    })??;
    Ok(built)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::coupling::{
        check_completeness, check_orthogonality, closed_sum, isoscalar_table, param_coefficient, param_expansion,
    };
    use crate::exact::rat;

    fn lab(h: &[i64]) -> IrrepLabel {
        IrrepLabel::new(h.to_vec()).unwrap()
    }

    fn triple(a: &[i64], b: &[i64], c: &[i64]) -> [IrrepLabel; 3] {
        [lab(a), lab(b), lab(c)]
    }

    #[test]
    fn multiplicities() {
        let oct = [2, 1, 0];
        assert_eq!(solve_k(&triple(&oct, &oct, &oct)).unwrap().len(), 2);
        assert_eq!(solve_k(&triple(&[1, 0, 0], &[1, 1, 0], &[1, 1, 1])).unwrap().len(), 1);
        assert_eq!(solve_k(&triple(&[0, 0, 0], &[2, 1, 0], &[2, 1, 0])).unwrap().len(), 1);
        assert!(solve_k(&triple(&[1, 0, 0], &[1, 0, 0], &[0, 0, 0])).unwrap().is_empty());
        assert_eq!(solve_k(&triple(&oct, &oct, &[3, 3, 0])).unwrap()[0].k[7], 1);
    }

    #[test]
    fn three_by_antithree_singlet() {
        let t = su3_table(&triple(&[1, 0, 0], &[1, 1, 0], &[0, 0, 0]), None).unwrap();
        assert_eq!(t.entries.len(), 3);
        let third = SqrtRational::sqrt(rat(1, 3)).unwrap();
        assert!(t.entries.iter().all(|e| e.value.abs() == third));
    }

    #[test]
    fn octet_unitarity() {
        let oct = [2, 1, 0];
        let chans = [vec![0, 0, 0], vec![2, 1, 0], vec![3, 0, 0], vec![3, 3, 0], vec![4, 2, 0]];
        let tables: Vec<CouplingTable> =
            chans.iter().map(|c| su3_table(&triple(&oct, &oct, c), None).unwrap()).collect();
        assert_eq!(tables[1].rho_values, vec![0, 1]);
        check_orthogonality(&tables).unwrap();
        check_completeness(&tables).unwrap();
        for t in &tables {
            isoscalar_table(t).unwrap();
        }
    }

    #[test]
    fn path_agreement() {
        let oct = [2, 1, 0];
        let labels = triple(&oct, &oct, &oct);
        for kv in solve_k(&labels).unwrap() {
            let exp = param_expansion(&kv).unwrap();
            for ps in balanced_triples(&labels) {
                assert_eq!(closed_sum(&kv, &ps).unwrap(), param_coefficient(&exp, &ps), "{kv:?}");
            }
        }
    }
}
