use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use super::poly::ExactPoly;
use super::var::VarId;
use crate::error::{Error, Result};

/// Determinant by Laplace expansion along the first row.
pub fn det<T>(m: &[Vec<T>]) -> T
where
    T: Clone + Zero + for<'a> Add<&'a T, Output = T> + for<'a> Sub<&'a T, Output = T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    let n = m.len();
    match n {
        0 => unreachable!("determinant of an empty matrix"),
        1 => return m[0][0].clone(),
        _ => {}
    }
    let mut acc = T::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let sub: Vec<Vec<T>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let t = &m[0][j] * &det(&sub);
        acc = if j % 2 == 0 { acc + &t } else { acc - &t };
    }
    acc
}

fn check_indices(idx: &[usize], bound: usize, what: &str) -> Result<()> {
    if idx.iter().any(|&i| i == 0 || i > bound) {
        return Err(Error::Structural(format!("{what} index out of range 1..={bound}: {idx:?}")));
    }
    if idx.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Inequality(format!("{what} indices must be strictly increasing: {idx:?}")));
    }
    Ok(())
}

/// Minor of `mat` on 1-based `rows` × `cols`.
pub fn minor<T>(mat: &[Vec<T>], rows: &[usize], cols: &[usize]) -> Result<T>
where
    T: Clone + Zero + for<'a> Add<&'a T, Output = T> + for<'a> Sub<&'a T, Output = T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    if rows.is_empty() || rows.len() != cols.len() {
        return Err(Error::Structural(format!("minor needs equal non-empty index lists, got {rows:?} and {cols:?}")));
    }
    let n = mat.len();
    check_indices(rows, n, "row")?;
    check_indices(cols, mat.first().map_or(0, Vec::len), "column")?;
    let sub: Vec<Vec<T>> = rows.iter().map(|&r| cols.iter().map(|&c| mat[r - 1][c - 1].clone()).collect()).collect();
    Ok(det(&sub))
}

/// The symbolic `n × n` matrix `z[r,c]` of a slot.
pub fn symbolic_matrix(n: usize, slot: u8) -> Vec<Vec<ExactPoly>> {
    (1..=n).map(|r| (1..=n).map(|c| ExactPoly::var(VarId::z(slot, r, c))).collect()).collect()
}

/// `Δ^{1..k}_{cols}(z)`: rows `1..k` of the slot's symbolic matrix, `k = cols.len()`.
pub fn z_minor(slot: u8, cols: &[usize]) -> Result<ExactPoly> {
    let k = cols.len();
    let n = cols.iter().copied().max().unwrap_or(0).max(k);
    let z = symbolic_matrix(n, slot);
    let rows: Vec<usize> = (1..=k).collect();
    minor(&z, &rows, cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::polyengine::var::Monomial;
    use num_rational::BigRational;

    #[test]
    fn two_by_two_minor() {
        let d = z_minor(0, &[1, 2]).unwrap();
        let m1 = Monomial::from_pairs([(VarId::z(0, 1, 1), 1), (VarId::z(0, 2, 2), 1)]);
        let m2 = Monomial::from_pairs([(VarId::z(0, 1, 2), 1), (VarId::z(0, 2, 1), 1)]);
        assert_eq!(d.len(), 2);
        assert_eq!(d.coeff(&m1), int(1));
        assert_eq!(d.coeff(&m2), int(-1));
    }

    #[test]
    fn single_entry_and_rejections() {
        let z = symbolic_matrix(3, 0);
        assert_eq!(minor(&z, &[2], &[3]).unwrap(), ExactPoly::var(VarId::z(0, 2, 3)));
        assert!(minor(&z, &[1, 1], &[1, 2]).is_err());
        assert!(minor(&z, &[1, 2], &[2, 2]).is_err());
        assert!(minor(&z, &[1], &[4]).is_err());
    }

    #[test]
    fn equal_columns_vanish() {
        let mut z = symbolic_matrix(2, 0);
        for row in &mut z {
            row[1] = row[0].clone();
        }
        assert!(minor(&z, &[1, 2], &[1, 2]).unwrap().is_zero());
    }

    #[test]
    fn numeric_determinant() {
        let m: Vec<Vec<BigRational>> = vec![vec![int(2), int(1), int(0)], vec![int(1), int(3), int(1)], vec![int(0), int(1), int(4)]];
        assert_eq!(det(&m), int(18));
    }
}
