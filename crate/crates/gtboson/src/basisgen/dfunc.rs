use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::consts::semimax_norm;
use crate::error::{Error, Result};
use crate::gelfand::{lr_exponents, semimax_pattern, IrrepLabel};
use crate::polyengine::{minor, SqrtRational};

pub type GaussRational = Complex<BigRational>;

/// `value · scale`, with the square-root factor kept apart from the exact
/// complex product.
#[derive(Clone, Debug, PartialEq)]
pub struct DValue {
    pub value: GaussRational,
    pub scale: SqrtRational,
}

fn cpow(z: &GaussRational, e: i64) -> GaussRational {
    (0..e).fold(GaussRational::one(), |acc, _| &acc * z)
}

/// Semi-maximal D-function: the minor product
/// `∏_{k<n} Δ_{1..k}(U)^{R_n^k} ∏_{k≤n} Δ_{1..k−1,n}(U)^{L_n^k}` evaluated
/// on `U` itself, times `1/√N`. The minors are taken on rows `1..k` of `U`
/// as given, so `[1,0]` with branch `[0]` yields `u₁₂`. The matrix element of
/// the right action `z ↦ zU` is this value at `Uᵀ`.
pub fn d_semimax_eval(label: &IrrepLabel, sub: &[i64], u: &[Vec<GaussRational>]) -> Result<DValue> {
    let n = label.n();
    if u.len() != n || u.iter().any(|r| r.len() != n) {
        return Err(Error::Structural(format!("matrix must be {n}×{n}")));
    }
    let lr = lr_exponents(&semimax_pattern(label, sub)?);
    let mut value = GaussRational::one();
    let rows = |k: usize| (1..=k).collect::<Vec<usize>>();
    for k in 1..n {
        value = &value * &cpow(&minor(u, &rows(k), &rows(k))?, lr.r(n, k));
    }
    for k in 1..=n {
        let mut cols: Vec<usize> = (1..k).collect();
        cols.push(n);
        value = &value * &cpow(&minor(u, &rows(k), &cols)?, lr.l(n, k));
    }
    let scale = SqrtRational::sqrt(semimax_norm(label, sub)?)?.recip()?;
    if value.is_zero() {
        return Ok(DValue { value, scale: SqrtRational::zero() });
    }
    Ok(DValue { value, scale })
}
