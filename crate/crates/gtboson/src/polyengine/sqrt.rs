use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{parse_ratio, ratio_string};

/// Splits `n` as `s² · f` with `f` square-free; returns `(s, f)`.
///
/// Trial division runs while `d³ ≤ n`; what is left then has at most two
/// prime factors, so it is either a square or square-free.
pub fn square_free_split(n: &BigUint) -> (BigUint, BigUint) {
    if n.is_zero() {
        return (BigUint::zero(), BigUint::one());
    }
    let mut n = n.clone();
    let mut s = BigUint::one();
    let mut f = BigUint::one();
    let mut d = BigUint::from(2u32);
    loop {
        if &d * &d * &d > n {
            break;
        }
        let mut e = 0u32;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            s *= d.pow(e / 2);
            if e % 2 == 1 {
                f *= &d;
            }
        }
        d += if d == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    if !n.is_one() {
        let r = n.sqrt();
        if &r * &r == n {
            s *= r;
        } else {
            f *= n;
        }
    }
    (s, f)
}

/// Exact `q·√r`.
///
/// Canonical form: write the square `q²r = N/D` in lowest terms and
/// `N = a·n²`, `D = b·d²` with `a`, `b` square-free. Then `q = ±n/d` and
/// `r = a/b`. Zero is `q = 0, r = 1`. Equality of values is equality of
/// fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SqrtRational {
    q: BigRational,
    r: BigRational,
}

impl SqrtRational {
    pub fn new(q: BigRational, r: BigRational) -> Result<Self> {
        if r.is_negative() {
            return Err(Error::Unsupported(format!("square root of negative {r}")));
        }
        if q.is_zero() || r.is_zero() {
            return Ok(Self::zero());
        }
        let sign = if q.is_negative() { -BigInt::one() } else { BigInt::one() };
        let sq = &q * &q * &r;
        let (n, a) = square_free_split(sq.numer().magnitude());
        let (d, b) = square_free_split(sq.denom().magnitude());
        Ok(SqrtRational {
            q: BigRational::new(sign * BigInt::from_biguint(Sign::Plus, n), BigInt::from_biguint(Sign::Plus, d)),
            r: BigRational::new(BigInt::from_biguint(Sign::Plus, a), BigInt::from_biguint(Sign::Plus, b)),
        })
    }

    pub fn zero() -> Self {
        SqrtRational { q: BigRational::zero(), r: BigRational::one() }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::new(q, BigRational::one()).expect("r = 1 is non-negative")
    }

    /// `√r` for non-negative `r`.
    pub fn sqrt(r: BigRational) -> Result<Self> {
        Self::new(BigRational::one(), r)
    }

    pub fn q(&self) -> &BigRational {
        &self.q
    }

    pub fn r(&self) -> &BigRational {
        &self.r
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.q.is_positive()
    }

    /// The exact square `q²·r`, keeping the sign of the value.
    pub fn signed_square(&self) -> BigRational {
        let s = &self.q * &self.q * &self.r;
        if self.q.is_negative() {
            -s
        } else {
            s
        }
    }

    pub fn square(&self) -> BigRational {
        &self.q * &self.q * &self.r
    }

    pub fn abs(&self) -> Self {
        SqrtRational { q: self.q.abs(), r: self.r.clone() }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Inconsistent("reciprocal of zero".into()));
        }
        Self::new(self.q.recip(), self.r.recip())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(&self.q * c, self.r.clone()).expect("radicand unchanged")
    }

    /// The value when `r = 1`.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.r.is_one().then(|| self.q.clone())
    }

    pub fn to_f64(&self) -> f64 {
        let q = self.q.numer().to_f64().unwrap_or(f64::NAN) / self.q.denom().to_f64().unwrap_or(f64::NAN);
        let r = self.r.numer().to_f64().unwrap_or(f64::NAN) / self.r.denom().to_f64().unwrap_or(f64::NAN);
        q * r.sqrt()
    }

    /// `"p/q*sqrt(a/b)"`.
    pub fn to_compact(&self) -> String {
        format!("{}*sqrt({})", ratio_string(&self.q), ratio_string(&self.r))
    }

    pub fn parse_compact(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not p/q*sqrt(a/b): {s:?}"));
        let (q, rest) = s.trim().split_once("*sqrt(").ok_or_else(bad)?;
        let r = rest.strip_suffix(')').ok_or_else(bad)?;
        Self::new(parse_ratio(q)?, parse_ratio(r)?)
    }
}

impl Mul<&SqrtRational> for &SqrtRational {
    type Output = SqrtRational;
    fn mul(self, rhs: &SqrtRational) -> SqrtRational {
        SqrtRational::new(&self.q * &rhs.q, &self.r * &rhs.r).expect("product of non-negative radicands")
    }
}

impl Mul for SqrtRational {
    type Output = SqrtRational;
    fn mul(self, rhs: SqrtRational) -> SqrtRational {
        &self * &rhs
    }
}

impl Div<&SqrtRational> for &SqrtRational {
    type Output = SqrtRational;
    /// Panics on division by zero, like rational division.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &SqrtRational) -> SqrtRational {
        self * &rhs.recip().expect("division by zero")
    }
}

impl Neg for SqrtRational {
    type Output = SqrtRational;
    fn neg(self) -> SqrtRational {
        SqrtRational { q: -self.q, r: self.r }
    }
}

impl Neg for &SqrtRational {
    type Output = SqrtRational;
    fn neg(self) -> SqrtRational {
        -self.clone()
    }
}

impl fmt::Display for SqrtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact())
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    q: String,
    r: String,
}

impl Serialize for SqrtRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire { q: ratio_string(&self.q), r: ratio_string(&self.r) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SqrtRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        let q = parse_ratio(&w.q).map_err(serde::de::Error::custom)?;
        let r = parse_ratio(&w.r).map_err(serde::de::Error::custom)?;
        let v = SqrtRational::new(q, r).map_err(serde::de::Error::custom)?;
        if ratio_string(&v.q) != w.q.trim() || ratio_string(&v.r) != w.r.trim() {
            return Err(serde::de::Error::custom("SqrtRational not in canonical form"));
        }
        Ok(v)
    }
}

/// Exact finite sum `Σ c_s √s` over square-free integers `s`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SurdSum {
    terms: BTreeMap<BigUint, BigRational>,
}

impl SurdSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_value(&mut self, v: &SqrtRational) {
        if v.is_zero() {
            return;
        }
        // q√(a/b) = (q/b)√(ab), with ab square-free since a, b are coprime
        let a = v.r.numer().magnitude().clone();
        let b = v.r.denom().magnitude().clone();
        let coeff = &v.q / BigRational::from_integer(BigInt::from_biguint(Sign::Plus, b.clone()));
        let key = a * b;
        let e = self.terms.entry(key.clone()).or_insert_with(BigRational::zero);
        *e += coeff;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Rational value if only the `√1` component is present.
    pub fn to_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&BigUint::one()).cloned(),
            _ => None,
        }
    }
}

impl Add<&SqrtRational> for SurdSum {
    type Output = SurdSum;
    fn add(mut self, rhs: &SqrtRational) -> SurdSum {
        self.add_value(rhs);
        self
    }
}

/// `gcd`-free check that a rational is a perfect square.
pub fn is_rational_square(r: &BigRational) -> bool {
    if r.is_negative() {
        return false;
    }
    let n = r.numer().magnitude();
    let d = r.denom().magnitude();
    let sn = n.sqrt();
    let sd = d.sqrt();
    &sn * &sn == *n && &sd * &sd == *d && n.gcd(d).is_one()
}
