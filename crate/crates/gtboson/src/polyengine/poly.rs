use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::var::{Monomial, VarId};
use crate::error::{Error, Result};

/// Sparse polynomial with exact rational coefficients. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExactPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl ExactPoly {
    pub fn constant(c: BigRational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(v: VarId) -> Self {
        Self::term(Monomial::var(v), BigRational::one())
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, BigRational::one())
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        ExactPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut p = ExactPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Largest monomial in the lexicographic order, with its coefficient.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> ExactPoly {
        if c.is_zero() {
            return ExactPoly::zero();
        }
        ExactPoly { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> ExactPoly {
        ExactPoly { terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> ExactPoly {
        let mut acc = ExactPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Groups terms by their part in the variables selected by `pred`.
    /// Each value is the cofactor polynomial in the remaining variables.
    pub fn split_by(&self, pred: impl Fn(&VarId) -> bool) -> BTreeMap<Monomial, ExactPoly> {
        let mut out: BTreeMap<Monomial, ExactPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (sel, rest) = m.split(&pred);
            out.entry(sel).or_default().add_term(rest, c.clone());
        }
        out
    }

    /// The polynomial multiplying exactly `m` when `self` is viewed as a
    /// polynomial in the variables selected by `pred`.
    pub fn extract_coefficient(&self, m: &Monomial, pred: impl Fn(&VarId) -> bool) -> ExactPoly {
        let mut out = ExactPoly::zero();
        for (k, c) in &self.terms {
            if !k.divisible_by(m) {
                continue;
            }
            let (sel, rest) = k.split(&pred);
            if &sel == m {
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    pub fn map_vars(&self, f: impl Fn(VarId) -> VarId) -> ExactPoly {
        ExactPoly::from_terms(self.terms.iter().map(|(m, c)| (m.map_vars(&f), c.clone())))
    }

    /// Sum of all coefficients, i.e. the value at every variable equal to 1.
    pub fn coefficient_sum(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |a, c| a + c)
    }
}

impl Zero for ExactPoly {
    fn zero() -> Self {
        ExactPoly { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for ExactPoly {
    fn one() -> Self {
        ExactPoly::constant(BigRational::one())
    }
}

impl AddAssign<&ExactPoly> for ExactPoly {
    fn add_assign(&mut self, rhs: &ExactPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add<&ExactPoly> for &ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for ExactPoly {
    type Output = ExactPoly;
    fn add(mut self, rhs: ExactPoly) -> ExactPoly {
        self += &rhs;
        self
    }
}

impl Add<&ExactPoly> for ExactPoly {
    type Output = ExactPoly;
    fn add(mut self, rhs: &ExactPoly) -> ExactPoly {
        self += rhs;
        self
    }
}

impl Sub<&ExactPoly> for ExactPoly {
    type Output = ExactPoly;
    fn sub(mut self, rhs: &ExactPoly) -> ExactPoly {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
        self
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        ExactPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        -&self
    }
}

impl Sub<&ExactPoly> for &ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: ExactPoly) -> ExactPoly {
        &self - &rhs
    }
}

impl Mul<&ExactPoly> for &ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        let mut out = ExactPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: ExactPoly) -> ExactPoly {
        &self * &rhs
    }
}

/// Fock–Bargmann pairing: `⟨z^α, z^β⟩ = δ_{αβ} α!`, extended bilinearly.
/// Coefficients are real, so no conjugation is needed.
pub fn bargmann_inner(p: &ExactPoly, q: &ExactPoly) -> BigRational {
    let (small, large) = if p.len() <= q.len() { (p, q) } else { (q, p) };
    let mut acc = BigRational::zero();
    for (m, c) in small.terms() {
        if let Some(d) = large.terms.get(m) {
            acc += c * d * BigRational::from_integer(m.factorial_weight());
        }
    }
    acc
}

/// Degree in each column of the matrix variables `z[·,col]`, as a vector
/// indexed by `col - 1` up to the largest column present.
///
/// Every term must have the same column degrees; otherwise the first column
/// where two terms disagree is reported.
pub fn diagonal_degrees(p: &ExactPoly) -> Result<Vec<u32>> {
    let col_degrees = |m: &Monomial| {
        let mut d: Vec<u32> = Vec::new();
        for &(v, e) in m.pairs() {
            if let VarId::Z { col, .. } = v {
                let c = col as usize;
                if d.len() < c {
                    d.resize(c, 0);
                }
                d[c - 1] += e;
            }
        }
        d
    };
    let mut iter = p.terms();
    let Some((first, _)) = iter.next() else {
        return Ok(Vec::new());
    };
    let mut reference = col_degrees(first);
    for (m, _) in iter {
        let mut d = col_degrees(m);
        let len = d.len().max(reference.len());
        d.resize(len, 0);
        reference.resize(len, 0);
        if let Some(c) = (0..len).find(|&c| d[c] != reference[c]) {
            return Err(Error::Inconsistent(format!(
                "not homogeneous in column {}: degrees {} and {}",
                c + 1,
                reference[c],
                d[c]
            )));
        }
    }
    while reference.last() == Some(&0) {
        reference.pop();
    }
    Ok(reference)
}

impl fmt::Display for ExactPoly {
    /// Terms from the lexicographically largest monomial down:
    /// `3/2 * z[1,1]^2 * x1(2,1) - z[1,2] + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let coeff = if a.is_integer() { a.numer().to_string() } else { format!("{}/{}", a.numer(), a.denom()) };
            if m.is_one() {
                write!(f, "{coeff}")?;
            } else {
                write!(f, "{coeff} * {m}")?;
            }
        }
        Ok(())
    }
}

/// Integer coefficient helper for tests and closed forms.
pub fn poly_int(m: Monomial, c: i64) -> ExactPoly {
    ExactPoly::term(m, BigRational::from_integer(BigInt::from(c)))
}
