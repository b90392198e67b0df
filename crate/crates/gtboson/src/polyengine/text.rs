//! Parser for the canonical text form written by `Display` on
//! [`ExactPoly`] and [`Monomial`].

use num_traits::Signed;

use super::poly::ExactPoly;
use super::var::{Monomial, VarId};
use crate::error::{Error, Result};
use crate::exact::parse_ratio;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn parse_var(s: &str) -> Result<VarId> {
    let kind = s.chars().next().ok_or_else(|| parse_err("empty variable"))?;
    let open = if kind == 'z' { '[' } else { '(' };
    let close = if kind == 'z' { ']' } else { ')' };
    let lp = s.find(open).ok_or_else(|| parse_err(format!("bad variable {s:?}")))?;
    if !s.ends_with(close) {
        return Err(parse_err(format!("bad variable {s:?}")));
    }
    let slot: u8 = match &s[1..lp] {
        "" => 0,
        t => t.parse().map_err(|_| parse_err(format!("bad slot in {s:?}")))?,
    };
    let inner = &s[lp + 1..s.len() - 1];
    let (a, b) = inner.split_once(',').ok_or_else(|| parse_err(format!("bad indices in {s:?}")))?;
    let a: usize = a.trim().parse().map_err(|_| parse_err(format!("bad index in {s:?}")))?;
    let b: usize = b.trim().parse().map_err(|_| parse_err(format!("bad index in {s:?}")))?;
    match kind {
        'z' => Ok(VarId::z(slot, a, b)),
        'x' => Ok(VarId::x(slot, a, b)),
        'y' => Ok(VarId::y(slot, a, b)),
        _ => Err(parse_err(format!("unknown variable kind in {s:?}"))),
    }
}

fn parse_factor(s: &str) -> Result<(VarId, u32)> {
    match s.split_once('^') {
        Some((v, e)) => Ok((parse_var(v)?, e.parse().map_err(|_| parse_err(format!("bad exponent in {s:?}")))?)),
        None => Ok((parse_var(s)?, 1)),
    }
}

pub fn parse_monomial(s: &str) -> Result<Monomial> {
    let s = s.trim();
    if s == "1" {
        return Ok(Monomial::one());
    }
    let factors = s.split('*').map(|f| parse_factor(f.trim())).collect::<Result<Vec<_>>>()?;
    Ok(Monomial::from_pairs(factors))
}

pub fn parse_poly(s: &str) -> Result<ExactPoly> {
    let s = s.trim();
    if s == "0" {
        return Ok(ExactPoly::default());
    }
    let normalized = s.replace(" - ", " + -");
    let mut out = ExactPoly::default();
    for term in normalized.split(" + ") {
        let mut pieces = term.split(" * ");
        let head = pieces.next().ok_or_else(|| parse_err("empty term"))?.trim();
        let c = parse_ratio(head)?;
        let factors = pieces.map(|f| parse_factor(f.trim())).collect::<Result<Vec<_>>>()?;
        let m = Monomial::from_pairs(factors);
        if c.is_negative() && head.starts_with("--") {
            return Err(parse_err(format!("bad sign in {term:?}")));
        }
        out.add_term(m, c);
    }
    Ok(out)
}
