use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, int};
use crate::gelfand::{lr_exponents, pattern_phi, GelfandPattern};
use crate::polyengine::{ExactPoly, Monomial, SqrtRational, VarId};

/// `Ξ(a,b) = y_a x_b − x_a y_b` in the `(2,1)` parameters of slots `a`, `b`.
pub fn xi(a: u8, b: u8) -> Result<ExactPoly> {
    if a == b {
        return Err(Error::Structural(format!("Ξ({a},{a}) vanishes identically")));
    }
    let (xa, ya) = (VarId::x(a, 2, 1), VarId::y(a, 2, 1));
    let (xb, yb) = (VarId::x(b, 2, 1), VarId::y(b, 2, 1));
    let mut p = ExactPoly::monomial(Monomial::from_pairs([(ya, 1), (xb, 1)]));
    p.add_term(Monomial::from_pairs([(xa, 1), (yb, 1)]), -BigRational::one());
    Ok(p)
}

/// The SU(2) pattern of `(j, m)` given as `(2j, 2m)`: `h12 = 2j`, `h22 = 0`,
/// `h11 = j + m`.
pub fn su2_pattern(two_j: i64, two_m: i64) -> Result<GelfandPattern> {
    if two_j < 0 || (two_j + two_m) % 2 != 0 || two_m.abs() > two_j {
        return Err(Error::Inequality(format!("|m| ≤ j with j − m integral fails for 2j = {two_j}, 2m = {two_m}")));
    }
    GelfandPattern::new(vec![vec![two_j, 0], vec![(two_j + two_m) / 2]])
}

/// `(2j, 2m)` of a U(2) pattern.
pub fn su2_jm(p: &GelfandPattern) -> (i64, i64) {
    let (h12, h22, h11) = (p.h(1, 2), p.h(2, 2), p.h(1, 1));
    (h12 - h22, 2 * h11 - h12 - h22)
}

type XiCache = Mutex<HashMap<[u32; 3], Arc<ExactPoly>>>;

/// `Ξ(2,3)^{e0} Ξ(3,1)^{e1} Ξ(1,2)^{e2}`, cached.
fn xi_product(e: [u32; 3]) -> Arc<ExactPoly> {
    static CACHE: OnceLock<XiCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("cache lock").get(&e) {
        return p.clone();
    }
    let p = &(&xi(2, 3).expect("distinct").pow(e[0]) * &xi(3, 1).expect("distinct").pow(e[1]))
        * &xi(1, 2).expect("distinct").pow(e[2]);
    let p = Arc::new(p);
    cache.lock().expect("cache lock").insert(e, p.clone());
    p
}

/// SU(2) 3-j symbol from the invariant `Ξ(2,3)^{J−2j1} Ξ(3,1)^{J−2j2} Ξ(1,2)^{J−2j3}`:
/// the coefficient of `∏ x_s^{L_s} y_s^{R_s}`, times `√∏(L_s! R_s!)`, over
/// `√((J+1)! ∏(J−2j_s)!)`. Zero outside the selection rules.
pub fn su2_threej(p: [&GelfandPattern; 3]) -> Result<SqrtRational> {
    if p.iter().any(|q| q.n() != 2) {
        return Err(Error::Unsupported("SU(2) 3-j symbols need U(2) patterns".into()));
    }
    let jm: Vec<(i64, i64)> = p.iter().map(|q| su2_jm(q)).collect();
    let d: Vec<i64> = jm.iter().map(|x| x.0).collect();
    let two_big_j = d.iter().sum::<i64>();
    if two_big_j % 2 != 0 || jm.iter().map(|x| x.1).sum::<i64>() != 0 {
        return Ok(SqrtRational::zero());
    }
    let big_j = two_big_j / 2;
    let e = [big_j - d[0], big_j - d[1], big_j - d[2]];
    if e.iter().any(|&x| x < 0) {
        return Ok(SqrtRational::zero());
    }
    let poly = xi_product([e[0] as u32, e[1] as u32, e[2] as u32]);
    let mono = (0..3).fold(Monomial::one(), |acc, s| acc.mul(&pattern_phi(p[s], s as u8 + 1)));
    let c = poly.coeff(&mono);
    if c.is_zero() {
        return Ok(SqrtRational::zero());
    }
    let mut num = BigInt::one();
    for q in p {
        let lr = lr_exponents(q);
        num *= factorial(lr.l(2, 1)) * factorial(lr.r(2, 1));
    }
    let den = factorial(big_j + 1) * factorial(e[0]) * factorial(e[1]) * factorial(e[2]);
    SqrtRational::new(c, BigRational::new(num, den))
}

/// Textbook Racah formula for `(j1 j2 j3; m1 m2 m3)`, arguments doubled.
pub fn racah_threej(two_j: [i64; 3], two_m: [i64; 3]) -> SqrtRational {
    let [j1, j2, j3] = two_j;
    let [m1, m2, m3] = two_m;
    let half = |x: i64| (x % 2 == 0).then_some(x / 2);
    let ok_jm = (0..3).all(|s| two_m[s].abs() <= two_j[s] && (two_j[s] + two_m[s]) % 2 == 0);
    if !ok_jm || m1 + m2 + m3 != 0 {
        return SqrtRational::zero();
    }
    let tri = [half(j1 + j2 - j3), half(j1 - j2 + j3), half(-j1 + j2 + j3), half(j1 + j2 + j3)];
    let Some(tri) = tri.into_iter().collect::<Option<Vec<i64>>>() else { return SqrtRational::zero() };
    if tri.iter().any(|&x| x < 0) {
        return SqrtRational::zero();
    }
    let fact = |x: i64| int(factorial(x));
    let mut r = fact(tri[0]) * fact(tri[1]) * fact(tri[2]) / fact(tri[3] + 1);
    for s in 0..3 {
        r *= fact((two_j[s] + two_m[s]) / 2) * fact((two_j[s] - two_m[s]) / 2);
    }
    let t1 = (j3 - j2 + m1) / 2;
    let t2 = (j3 - j1 - m2) / 2;
    let t3 = tri[0];
    let t4 = (j1 - m1) / 2;
    let t5 = (j2 + m2) / 2;
    let mut sum = BigRational::zero();
    let kmin = 0.max(-t1).max(-t2);
    let kmax = t3.min(t4).min(t5);
    for k in kmin..=kmax {
        let term = (fact(k) * fact(t1 + k) * fact(t2 + k) * fact(t3 - k) * fact(t4 - k) * fact(t5 - k)).recip();
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if ((j1 - j2 - m3) / 2) % 2 != 0 {
        sum = -sum;
    }
    SqrtRational::new(sum, r).expect("non-negative radicand")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn p(two_j: i64, two_m: i64) -> GelfandPattern {
        su2_pattern(two_j, two_m).unwrap()
    }

    fn gf(j: [i64; 3], m: [i64; 3]) -> SqrtRational {
        su2_threej([&p(j[0], m[0]), &p(j[1], m[1]), &p(j[2], m[2])]).unwrap()
    }

    #[test]
    fn xi_examples() {
        assert_eq!(xi(1, 2).unwrap().to_string(), "-1 * x1(2,1) * y2(2,1) + 1 * x2(2,1) * y1(2,1)");
        assert!(xi(2, 2).is_err());
        assert_eq!(xi(3, 1).unwrap(), -xi(1, 3).unwrap());
    }

    #[test]
    fn spec_examples() {
        let half = SqrtRational::sqrt(rat(1, 2)).unwrap();
        assert_eq!(racah_threej([1, 1, 0], [1, -1, 0]).abs(), half);
        assert_eq!(gf([1, 1, 0], [1, -1, 0]).abs(), half);
        assert!(gf([2, 2, 2], [0, 0, 0]).is_zero());
        let third = SqrtRational::sqrt(rat(1, 3)).unwrap();
        assert_eq!(gf([2, 2, 0], [2, -2, 0]).abs(), third);
        assert!(racah_threej([1, 1, 4], [1, -1, 0]).is_zero());
        assert!(racah_threej([1, 1, 0], [1, 1, 0]).is_zero());
    }

    #[test]
    fn generating_function_equals_racah() {
        for j1 in 0..=4i64 {
            for j2 in 0..=4 {
                for j3 in 0..=4 {
                    for m1 in (-j1..=j1).step_by(2) {
                        for m2 in (-j2..=j2).step_by(2) {
                            let m3 = -m1 - m2;
                            if m3.abs() > j3 || (j3 + m3) % 2 != 0 {
                                continue;
                            }
                            assert_eq!(gf([j1, j2, j3], [m1, m2, m3]), racah_threej([j1, j2, j3], [m1, m2, m3]));
                        }
                    }
                }
            }
        }
    }
}
