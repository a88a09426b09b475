//! Truncated series expansion of rational functions in one variable.

use crate::poly::SparsePoly;
use crate::ratfunc::RationalFunction;
use crate::var::{self, Var};
use crate::ExactAlgError;

/// A truncated Laurent/Taylor series: `sum_{k=0..} coeffs[k] * var^{offset+k}`
/// exact through `var^{offset + coeffs.len() - 1}`.
#[derive(Debug, Clone)]
pub struct Series {
    pub var: Var,
    pub offset: i64,
    pub coeffs: Vec<RationalFunction>,
}

impl Series {
    /// Coefficient of `var^k` (within the computed window).
    pub fn coeff(&self, k: i64) -> RationalFunction {
        let idx = k - self.offset;
        if idx < 0 {
            return RationalFunction::zero();
        }
        self.coeffs
            .get(idx as usize)
            .cloned()
            .unwrap_or_else(RationalFunction::zero)
    }
}

/// Split a polynomial into coefficients of powers of `v` (as polynomials in
/// the remaining variables), indexed from the minimum exponent.
fn coefficients_in(p: &SparsePoly, v: Var) -> (i64, Vec<SparsePoly>) {
    if p.is_zero() {
        return (0, vec![]);
    }
    let p = p.shrink_vars();
    let idx = match p.vars().iter().position(|&w| w == v) {
        None => return (0, vec![p.clone()]),
        Some(i) => i,
    };
    let rest = var::intern(p.vars().iter().copied().filter(|&w| w != v).collect());
    let lo = p.terms().iter().map(|(e, _)| e[idx]).min().unwrap() as i64;
    let hi = p.terms().iter().map(|(e, _)| e[idx]).max().unwrap() as i64;
    let mut out = vec![vec![]; (hi - lo + 1) as usize];
    for (e, c) in p.terms() {
        let k = (e[idx] as i64 - lo) as usize;
        let ne = e
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, &x)| x)
            .collect();
        out[k].push((ne, c.clone()));
    }
    (
        lo,
        out.into_iter()
            .map(|terms| SparsePoly::from_terms(rest.clone(), terms))
            .collect(),
    )
}

/// Expand `f` as a series in `var` around 0, exact through order
/// `offset + order` (that is, `order + 1` coefficients starting at the
/// leading exponent). The offset may be negative (Laurent expansion);
/// callers that require a Taylor expansion should check `offset >= 0`.
pub fn series_expand(
    f: &RationalFunction,
    v: Var,
    order: usize,
) -> Result<Series, ExactAlgError> {
    if f.is_zero() {
        return Ok(Series { var: v, offset: 0, coeffs: vec![RationalFunction::zero(); order + 1] });
    }
    let (nlo, ncoeffs) = coefficients_in(f.numer(), v);
    let den = f.denom();
    let (dlo, dcoeffs) = coefficients_in(&den, v);
    // dcoeffs[0] is nonzero by construction of the minimum exponent.
    let d0 = RationalFunction::from_poly(dcoeffs[0].clone());
    if d0.is_zero() {
        return Err(ExactAlgError::NotExpandable { var: v });
    }
    let d0_inv = d0.inv();
    let offset = nlo - dlo;
    let mut coeffs: Vec<RationalFunction> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = ncoeffs
            .get(k)
            .map(|p| RationalFunction::from_poly(p.clone()))
            .unwrap_or_else(RationalFunction::zero);
        for j in 0..k {
            if let Some(d) = dcoeffs.get(k - j) {
                if !d.is_zero() {
                    acc = acc.sub(&coeffs[j].mul_poly(d));
                }
            }
        }
        coeffs.push(acc.mul(&d0_inv));
    }
    Ok(Series { var: v, offset, coeffs })
}

/// Taylor expansion: errors if the function has a pole at `v = 0`.
pub fn series_expand_taylor(
    f: &RationalFunction,
    v: Var,
    order: usize,
) -> Result<Series, ExactAlgError> {
    let s = series_expand(f, v, order)?;
    if s.offset < 0 && s.coeffs.iter().take((-s.offset) as usize).any(|c| !c.is_zero()) {
        return Err(ExactAlgError::NotExpandable { var: v });
    }
    Ok(s)
}
