//! Exact linear systems `A·i = b` over non-negative integer unknowns.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Reduced row echelon form; returns the pivot column of each non-zero row.
pub fn rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn to_rational(a: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    a.iter().map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect()
}

pub fn rank(a: &[Vec<i64>]) -> usize {
    rref(&mut to_rational(a)).len()
}

/// Number of unknowns left free by the equations.
pub fn free_count(a: &[Vec<i64>]) -> usize {
    a.first().map_or(0, Vec::len) - rank(a)
}

/// Upper bound per unknown from equations whose coefficients are all
/// non-negative; `None` if some unknown is unbounded that way.
fn bounds(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<i64>> {
    let n = a.first().map_or(0, Vec::len);
    let mut ub = vec![i64::MAX; n];
    for (row, &rhs) in a.iter().zip(b) {
        if row.iter().all(|&x| x >= 0) {
            for (j, &c) in row.iter().enumerate() {
                if c > 0 {
                    ub[j] = ub[j].min(rhs.max(-1) / c);
                }
            }
        }
    }
    ub.iter().all(|&u| u != i64::MAX).then_some(ub)
}

/// All non-negative integer solutions of `A·i = b`, in lexicographic order.
///
/// Free unknowns of the echelon form are scanned inside their bounds and the
/// pivots back-solved, so the cost is the size of the free box.
pub fn nonneg_solutions(a: &[Vec<i64>], b: &[i64]) -> Result<Vec<Vec<i64>>> {
    if a.len() != b.len() {
        return Err(Error::Structural("row count of A and b differ".into()));
    }
    let n = a.first().map_or(0, Vec::len);
    let ub = bounds(a, b).ok_or_else(|| Error::Unsupported("unbounded unknown".into()))?;
    if ub.iter().any(|&u| u < 0) {
        return Ok(Vec::new());
    }
    let mut aug = to_rational(a);
    for (row, &rhs) in aug.iter_mut().zip(b) {
        row.push(BigRational::from_integer(rhs.into()));
    }
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&n) {
        return Ok(Vec::new());
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut out = Vec::new();
    let mut vals = vec![0i64; free.len()];
    loop {
        let mut sol = vec![0i64; n];
        for (k, &f) in free.iter().enumerate() {
            sol[f] = vals[k];
        }
        let mut ok = true;
        for (r, &p) in pivots.iter().enumerate() {
            let mut v = aug[r][n].clone();
            for (k, &f) in free.iter().enumerate() {
                v -= &aug[r][f] * BigRational::from_integer(BigInt::from(vals[k]));
            }
            if !v.is_integer() || v.is_negative() {
                ok = false;
                break;
            }
            sol[p] = v.to_integer().to_i64().expect("small");
        }
        if ok {
            out.push(sol);
        }
        let mut k = free.len();
        loop {
            if k == 0 {
                out.sort();
                return Ok(out);
            }
            k -= 1;
            if vals[k] < ub[free[k]] {
                vals[k] += 1;
                break;
            }
            vals[k] = 0;
        }
    }
}
