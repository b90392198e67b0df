use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::su2::xi;
use super::su3::KVector;
use crate::error::{Error, Result};
use crate::exact::factorial;
use crate::gelfand::{lr_exponents, pattern_phi, GelfandPattern};
use crate::linsys::nonneg_solutions;
use crate::polyengine::{ExactPoly, Monomial, VarId};

fn m(pairs: &[(VarId, u32)]) -> ExactPoly {
    ExactPoly::monomial(Monomial::from_pairs(pairs.iter().copied()))
}

fn x(s: u8, l: usize, mu: usize) -> (VarId, u32) {
    (VarId::x(s, l, mu), 1)
}

fn y(s: u8, l: usize, mu: usize) -> (VarId, u32) {
    (VarId::y(s, l, mu), 1)
}

fn xi_(a: u8, b: u8) -> ExactPoly {
    xi(a, b).expect("distinct slots")
}

/// `W¹..W⁷` in the parameter space of the three slots:
///
/// - `W¹ = y1(3,1) x2(3,2) Ξ12 + x1(3,1) y2(3,2)`
/// - `W² = −y2(3,1) x1(3,2) Ξ12 + x2(3,1) y1(3,2)`
/// - `W³ = y1(3,1) x3(3,2) Ξ13 + x1(3,1) y3(3,2)`
/// - `W⁴ = −y3(3,1) x1(3,2) Ξ13 + x3(3,1) y1(3,2)`
/// - `W⁵ = y2(3,1) x3(3,2) Ξ23 + x2(3,1) y3(3,2)`
/// - `W⁶ = −y3(3,1) x2(3,2) Ξ23 + x3(3,1) y2(3,2)`
/// - `W⁷ = x3 y1 y2(3,1) Ξ12 − x2 y1 y3(3,1) Ξ13 + x1 y2 y3(3,1) Ξ23`
pub fn w_invariants() -> [ExactPoly; 7] {
    let bil = |a: u8, b: u8, sign: i64| {
        let t = &m(&[y(a, 3, 1), x(b, 3, 2)]) * &xi_(a.min(b), a.max(b));
        let t = if sign < 0 { -t } else { t };
        t + m(&[x(a, 3, 1), y(b, 3, 2)])
    };
    let w1 = &m(&[y(1, 3, 1), x(2, 3, 2)]) * &xi_(1, 2) + m(&[x(1, 3, 1), y(2, 3, 2)]);
    let w2 = bil(2, 1, -1);
    let w3 = &m(&[y(1, 3, 1), x(3, 3, 2)]) * &xi_(1, 3) + m(&[x(1, 3, 1), y(3, 3, 2)]);
    let w4 = bil(3, 1, -1);
    let w5 = &m(&[y(2, 3, 1), x(3, 3, 2)]) * &xi_(2, 3) + m(&[x(2, 3, 1), y(3, 3, 2)]);
    let w6 = bil(3, 2, -1);
    let w7 = &(&m(&[x(3, 3, 1), y(1, 3, 1), y(2, 3, 1)]) * &xi_(1, 2))
        - &(&m(&[x(2, 3, 1), y(1, 3, 1), y(3, 3, 1)]) * &xi_(1, 3))
        + (&m(&[x(1, 3, 1), y(2, 3, 1), y(3, 3, 1)]) * &xi_(2, 3));
    [w1, w2, w3, w4, w5, w6, w7]
}

/// Right-hand sides of the fifteen-equation index system. `ly[s][μ−1]` is
/// the exponent of `y_s(3,μ)`, `rx[s][μ−1]` that of `x_s(3,μ)`, and
/// `p = (P1, P2, P3)` are the exponents of `Ξ13`, `Ξ12`, `Ξ23`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexInputs {
    pub ly: [[i64; 2]; 3],
    pub rx: [[i64; 2]; 3],
    pub p: [i64; 3],
}

impl IndexInputs {
    /// Inputs of a pattern triple; `None` when the `Ξ` exponents are not
    /// non-negative integers.
    pub fn from_patterns(ps: &[GelfandPattern; 3]) -> Option<IndexInputs> {
        let lr: Vec<_> = ps.iter().map(lr_exponents).collect();
        let ly = [0, 1, 2].map(|s| [lr[s].r(3, 1), lr[s].r(3, 2)]);
        let rx = [0, 1, 2].map(|s| [lr[s].l(3, 1), lr[s].l(3, 2)]);
        let d: Vec<i64> = lr.iter().map(|t| t.l(2, 1) + t.r(2, 1)).collect();
        let twice = [d[0] + d[2] - d[1], d[0] + d[1] - d[2], d[1] + d[2] - d[0]];
        if twice.iter().any(|&t| t < 0 || t % 2 != 0) {
            return None;
        }
        Some(IndexInputs { ly, rx, p: twice.map(|t| t / 2) })
    }

    fn rhs(&self) -> Vec<i64> {
        let (l, r, p) = (&self.ly, &self.rx, &self.p);
        vec![
            l[0][0], l[0][1], l[1][0], l[1][1], l[2][0], l[2][1], r[0][0], r[0][1], r[1][0], r[1][1], r[2][0], r[2][1], p[0],
            p[1], p[2],
        ]
    }
}

/// Index sets of the fifteen equations (1-based `i`).
const SYSTEM: [&[usize]; 15] = [
    &[2, 6, 14, 15],
    &[4, 8],
    &[3, 10, 13, 15],
    &[1, 12],
    &[7, 11, 13, 14],
    &[5, 9],
    &[1, 5, 13],
    &[3, 7],
    &[4, 9, 14],
    &[2, 11],
    &[8, 12, 15],
    &[6, 10],
    &[6, 7, 14],
    &[2, 3, 15],
    &[11, 13, 10],
];

pub fn index_matrix() -> Vec<Vec<i64>> {
    SYSTEM
        .iter()
        .map(|idx| {
            let mut r = vec![0i64; 15];
            for &i in *idx {
                r[i - 1] = 1;
            }
            r
        })
        .collect()
}

fn satisfies(i: &[i64; 15], inp: &IndexInputs) -> bool {
    let rhs = inp.rhs();
    i.iter().all(|&v| v >= 0) && SYSTEM.iter().zip(&rhs).all(|(idx, &b)| idx.iter().map(|&j| i[j - 1]).sum::<i64>() == b)
}

/// Every non-negative solution of the fifteen-equation system.
pub fn index_solutions_bruteforce(inp: &IndexInputs) -> Result<Vec<[i64; 15]>> {
    let sols = nonneg_solutions(&index_matrix(), &inp.rhs())?;
    Ok(sols.into_iter().map(|v| v.try_into().expect("fifteen unknowns")).collect())
}

/// Solutions with `i5 + i6 = k3`, from the closed parametrisation in the
/// free indices `i7`, `i9`, `i11` with `i6 = k3 − L3(3,2) + i9`.
pub fn index_solutions_closed(inp: &IndexInputs, k3: i64) -> Vec<[i64; 15]> {
    let (l, r, p) = (&inp.ly, &inp.rx, &inp.p);
    let mut out = Vec::new();
    for i7 in 0..=r[0][1] {
        for i9 in 0..=l[2][1] {
            for i11 in 0..=r[1][1] {
                let i6 = k3 - l[2][1] + i9;
                let i2 = r[1][1] - i11;
                let i3 = r[0][1] - i7;
                let i5 = l[2][1] - i9;
                let i10 = r[2][1] - i6;
                let i14 = p[0] - i6 - i7;
                let i15 = p[1] - r[1][1] + i11 - r[0][1] + i7;
                let i13 = p[2] - i11 - r[2][1] + i6;
                let i1 = r[0][0] - l[2][1] + i9 - p[2] + i11 + r[2][1] - i6;
                let i12 = l[1][1] - i1;
                let i4 = r[1][0] - i9 - p[0] + i6 + i7;
                let i8 = l[0][1] - i4;
                let s = [i1, i2, i3, i4, i5, i6, i7, i8, i9, i10, i11, i12, i13, i14, i15];
                if satisfies(&s, inp) {
                    out.push(s);
                }
            }
        }
    }
    out.sort();
    out
}

/// `k_j = i_{2j−1} + i_{2j}` for `j ≤ 6` and `k7 = i13 + i14 + i15`.
pub fn k_of_solution(i: &[i64; 15]) -> [i64; 7] {
    [i[0] + i[1], i[2] + i[3], i[4] + i[5], i[6] + i[7], i[8] + i[9], i[10] + i[11], i[12] + i[13] + i[14]]
}

fn phi_product(ps: &[GelfandPattern; 3]) -> Monomial {
    (0..3).fold(Monomial::one(), |acc, s| acc.mul(&pattern_phi(&ps[s], s as u8 + 1)))
}

fn require_k7(kv: &KVector) -> Result<[u32; 7]> {
    if kv.k[7] != 0 {
        return Err(Error::Unsupported("the parameter-space invariants have no W⁸".into()));
    }
    Ok([0, 1, 2, 3, 4, 5, 6].map(|j| kv.k[j] as u32))
}

/// `∏ (W^j)^{k_j}` expanded in the parameters.
pub fn param_expansion(kv: &KVector) -> Result<ExactPoly> {
    let k = require_k7(kv)?;
    let ws = w_invariants();
    Ok(ws.iter().zip(k).fold(ExactPoly::one(), |acc, (w, e)| &acc * &w.pow(e)))
}

/// Coefficient of the three slots' φ-monomials in an expanded invariant.
pub fn param_coefficient(expansion: &ExactPoly, ps: &[GelfandPattern; 3]) -> BigRational {
    expansion.coeff(&phi_product(ps))
}

/// Closed triple sum: `ξ · Σ (−1)^{i3+i7+i11+i14} ∏ k_j! / ∏ i_m!`, where
/// `ξ` is the coefficient of the slots' `(2,1)` monomials in
/// `Ξ12^{P2} Ξ13^{P1} Ξ23^{P3}`.
pub fn closed_sum(kv: &KVector, ps: &[GelfandPattern; 3]) -> Result<BigRational> {
    require_k7(kv)?;
    let Some(inp) = IndexInputs::from_patterns(ps) else { return Ok(BigRational::zero()) };
    let [p1, p2, p3] = inp.p;
    let xis = &(&xi_(1, 2).pow(p2 as u32) * &xi_(1, 3).pow(p1 as u32)) * &xi_(2, 3).pow(p3 as u32);
    let mono = (0..3).fold(Monomial::one(), |acc, s| {
        let lr = lr_exponents(&ps[s]);
        let slot = s as u8 + 1;
        acc.mul(&Monomial::from_pairs([
            (VarId::x(slot, 2, 1), lr.l(2, 1) as u32),
            (VarId::y(slot, 2, 1), lr.r(2, 1) as u32),
        ]))
    });
    let xi_coef = xis.coeff(&mono);
    if xi_coef.is_zero() {
        return Ok(BigRational::zero());
    }
    let kfact = kv.k[..7].iter().fold(BigInt::one(), |acc, &k| acc * factorial(k));
    let mut sum = BigRational::zero();
    for i in index_solutions_closed(&inp, kv.k[2]) {
        if k_of_solution(&i)[..] != kv.k[..7] {
            continue;
        }
        let den = i.iter().fold(BigInt::one(), |acc, &v| acc * factorial(v));
        let term = BigRational::new(kfact.clone(), den);
        if (i[2] + i[6] + i[10] + i[13]) % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum * xi_coef)
}

/// The seven free entries of the SU(6) pattern whose rows are
/// `[h13 h13 h13 0 0 0] [h13 h13 h24 0 0] [h13 h24 h34 0] [h13 h23 h33] [h12 h22] [h12]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Su6Pattern {
    pub h13: i64,
    pub h24: i64,
    pub h34: i64,
    pub h23: i64,
    pub h33: i64,
    pub h12: i64,
    pub h22: i64,
}

impl Su6Pattern {
    pub fn rows(&self) -> Vec<Vec<i64>> {
        let s = self;
        vec![
            vec![s.h13, s.h13, s.h13, 0, 0, 0],
            vec![s.h13, s.h13, s.h24, 0, 0],
            vec![s.h13, s.h24, s.h34, 0],
            vec![s.h13, s.h23, s.h33],
            vec![s.h12, s.h22],
            vec![s.h12],
        ]
    }

    pub fn to_pattern(&self) -> Result<GelfandPattern> {
        GelfandPattern::new(self.rows())
    }
}

/// `k1 = h34−h33`, `k2 = h33`, `k3 = h12−h23`, `k4 = h22−h33`,
/// `k5 = (h13−h24)−(h12−h23)`, `k6 = h24−h23`, `k7 = (h23−h34)−(h22−h33)`.
pub fn k_exponents(p: &Su6Pattern) -> Result<[i64; 7]> {
    let k = [
        p.h34 - p.h33,
        p.h33,
        p.h12 - p.h23,
        p.h22 - p.h33,
        (p.h13 - p.h24) - (p.h12 - p.h23),
        p.h24 - p.h23,
        (p.h23 - p.h34) - (p.h22 - p.h33),
    ];
    if let Some(j) = k.iter().position(|&v| v < 0) {
        return Err(Error::Inequality(format!("k{} = {} < 0", j + 1, k[j])));
    }
    Ok(k)
}

/// Inverse of [`k_exponents`].
pub fn su6_from_k(k: &[i64; 7]) -> Su6Pattern {
    let h33 = k[1];
    let h34 = k[0] + k[1];
    let h22 = k[3] + k[1];
    let h23 = k[6] + k[0] + k[1] + k[3];
    Su6Pattern { h13: k.iter().sum(), h24: k[5] + h23, h34, h23, h33, h12: k[2] + h23, h22 }
}

/// The SU(6) pattern of a coupling for one `rho`.
pub fn triple_to_su6(labels: &[crate::gelfand::IrrepLabel; 3], rho: i64) -> Result<Su6Pattern> {
    let kv = super::su3::solve_k(labels)?
        .into_iter()
        .find(|kv| kv.rho == rho)
        .ok_or_else(|| Error::NoCoupling(format!("rho = {rho} is not admissible")))?;
    let k = require_k7(&kv)?;
    Ok(su6_from_k(&k.map(i64::from)))
}
