use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::exact::factorial;

/// A polynomial variable.
///
/// `Z` is a matrix entry `z[row,col]`; `X`/`Y` are the parameters
/// `x(λ,μ)`, `y(λ,μ)`. `slot` tags the tensor factor (0 for single-group
/// work, 1..=3 in coupling). The derived order is (kind, slot, λ/row, μ/col).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    Z { slot: u8, row: u8, col: u8 },
    X { slot: u8, l: u8, m: u8 },
    Y { slot: u8, l: u8, m: u8 },
}

impl VarId {
    pub fn z(slot: u8, row: usize, col: usize) -> Self {
        VarId::Z { slot, row: row as u8, col: col as u8 }
    }

    pub fn x(slot: u8, l: usize, m: usize) -> Self {
        VarId::X { slot, l: l as u8, m: m as u8 }
    }

    pub fn y(slot: u8, l: usize, m: usize) -> Self {
        VarId::Y { slot, l: l as u8, m: m as u8 }
    }

    pub fn slot(&self) -> u8 {
        match *self {
            VarId::Z { slot, .. } | VarId::X { slot, .. } | VarId::Y { slot, .. } => slot,
        }
    }

    pub fn is_z(&self) -> bool {
        matches!(self, VarId::Z { .. })
    }

    pub fn is_param(&self) -> bool {
        !self.is_z()
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = |slot: u8| if slot == 0 { String::new() } else { slot.to_string() };
        match *self {
            VarId::Z { slot, row, col } => write!(f, "z{}[{row},{col}]", tag(slot)),
            VarId::X { slot, l, m } => write!(f, "x{}({l},{m})", tag(slot)),
            VarId::Y { slot, l, m } => write!(f, "y{}({l},{m})", tag(slot)),
        }
    }
}

/// Product of variables with positive exponents, kept sorted by [`VarId`].
///
/// Ordering is lexicographic on dense exponent vectors: a monomial is larger
/// when it has the larger exponent at the first variable where they differ.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(VarId, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: VarId) -> Self {
        Monomial(vec![(v, 1)])
    }

    /// Zero exponents are dropped and repeated variables merged.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, u32)>) -> Self {
        let mut v: Vec<(VarId, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        v.sort_by_key(|&(var, _)| var);
        let mut out: Vec<(VarId, u32)> = Vec::with_capacity(v.len());
        for (var, e) in v {
            match out.last_mut() {
                Some((last, acc)) if *last == var => *acc += e,
                _ => out.push((var, e)),
            }
        }
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[(VarId, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.0
            .binary_search_by_key(&v, |&(var, _)| var)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    /// `other` divides `self`.
    pub fn divisible_by(&self, other: &Monomial) -> bool {
        other.0.iter().all(|&(v, e)| self.exponent(v) >= e)
    }

    /// Splits into (variables satisfying `pred`, the rest).
    pub fn split(&self, pred: impl Fn(&VarId) -> bool) -> (Monomial, Monomial) {
        let (a, b): (Vec<_>, Vec<_>) = self.0.iter().partition(|(v, _)| pred(v));
        (Monomial(a), Monomial(b))
    }

    /// `∏ e!`, the Bargmann norm² of the monomial.
    pub fn factorial_weight(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |acc, &(_, e)| acc * factorial(e as i64))
    }

    /// Renames every variable, e.g. to move a polynomial to another slot.
    pub fn map_vars(&self, f: impl Fn(VarId) -> VarId) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| (f(v), e)))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        for (x, y) in a.iter().zip(b.iter()) {
            match x.0.cmp(&y.0) {
                // self has a positive exponent where other has none
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match x.1.cmp(&y.1) {
                    Ordering::Equal => {}
                    o => return o,
                },
            }
        }
        a.len().cmp(&b.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(r: usize, c: usize) -> VarId {
        VarId::z(0, r, c)
    }

    #[test]
    fn lex_order_prefers_first_variable() {
        let a = Monomial::var(z(1, 1));
        let b = Monomial::from_pairs([(z(1, 2), 5)]);
        assert!(a > b);
        let c = Monomial::from_pairs([(z(1, 1), 1), (z(2, 2), 1)]);
        assert!(c > a);
        let d = Monomial::from_pairs([(z(1, 1), 2)]);
        assert!(d > c);
        assert!(Monomial::one() < b);
    }

    #[test]
    fn from_pairs_merges_and_drops_zero() {
        let m = Monomial::from_pairs([(z(2, 1), 1), (z(1, 1), 0), (z(2, 1), 2)]);
        assert_eq!(m.pairs(), &[(z(2, 1), 3)]);
    }

    #[test]
    fn display_forms() {
        let m = Monomial::from_pairs([(VarId::x(1, 2, 1), 2), (z(1, 2), 1)]);
        assert_eq!(m.to_string(), "z[1,2] * x1(2,1)^2");
        assert_eq!(Monomial::one().to_string(), "1");
    }

    #[test]
    fn variable_kind_order() {
        assert!(VarId::z(3, 1, 1) < VarId::x(0, 2, 1));
        assert!(VarId::x(3, 3, 2) < VarId::y(0, 2, 1));
    }
}
