//! Rational functions as numerator polynomial over a multiset of denominator
//! factors.
//!
//! The factored denominator keeps sums of structured fractions (the
//! `1/(1-(-q)^k s^alpha)` shapes that dominate this project) from blowing up:
//! common denominators are factor-multiset lcms, and cancellation is trial
//! division of the numerator by denominator factors — no multivariate gcd is
//! ever computed. Equality is exact (cross-multiplication) with a randomized
//! evaluation fast path.

use crate::dual::DualTheta;
use crate::poly::SparsePoly;
use crate::var::Var;
use crate::{BigRat, ExactAlgError};
use num::{One, Zero};
use std::cmp::Ordering;
use std::fmt;

/// An exact rational function. Invariants: no denominator factor is zero,
/// constant, or a pure `u`-monomial; factors are primitive with positive
/// leading coefficient and sorted canonically; the zero function has
/// numerator 0 and no factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: SparsePoly,
    den: Vec<(SparsePoly, u32)>,
}

impl RationalFunction {
    // ------------------------------------------------------------ constructors

    pub fn zero() -> Self {
        RationalFunction { num: SparsePoly::zero(), den: vec![] }
    }

    pub fn one() -> Self {
        RationalFunction { num: SparsePoly::one(), den: vec![] }
    }

    pub fn from_poly(p: SparsePoly) -> Self {
        RationalFunction { num: p, den: vec![] }
    }

    pub fn constant(c: BigRat) -> Self {
        RationalFunction::from_poly(SparsePoly::constant(c))
    }

    pub fn var(v: Var) -> Self {
        RationalFunction::from_poly(SparsePoly::var(v))
    }

    /// `num / den` with `den` an arbitrary nonzero polynomial.
    pub fn new(num: SparsePoly, den: SparsePoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = RationalFunction { num, den: vec![] };
        r.push_den_factor(den, 1);
        r.cancel();
        r
    }

    /// Multiply the denominator by `f^e`, normalizing the factor: scalar
    /// content and pure `u`-monomial parts are folded into the numerator
    /// (u is invertible as a Laurent variable); monomials in other variables
    /// become per-variable factors.
    fn push_den_factor(&mut self, f: SparsePoly, e: u32) {
        if e == 0 {
            return;
        }
        assert!(!f.is_zero(), "zero denominator factor");
        let (content, prim) = f.primitive();
        // num /= content^e
        let scale = num::pow::pow(content.recip(), e as usize);
        self.num = self.num.scale(&scale);
        if prim.is_one() {
            return;
        }
        // Extract a monomial gcd across terms (per-variable min exponent).
        let prim = prim.shrink_vars();
        let vars = prim.vars().clone();
        let mut mono: Vec<(Var, i32)> = vec![];
        for (i, &v) in vars.iter().enumerate() {
            let m = prim.terms().iter().map(|(ex, _)| ex[i]).min().unwrap();
            if m != 0 {
                mono.push((v, m));
            }
        }
        let mut core = prim;
        if !mono.is_empty() {
            let mut shift = SparsePoly::one();
            for &(v, m) in &mono {
                if v.laurent_allowed() {
                    shift = shift.mul(&SparsePoly::var_pow(v, m));
                } else {
                    shift = shift.mul(&SparsePoly::var_pow(v, m));
                }
            }
            core = core.try_div_exact(&shift).expect("monomial gcd divides");
            for &(v, m) in &mono {
                if v.laurent_allowed() {
                    // u^m in the denominator is u^{-m} in the numerator.
                    self.num = self.num.mul(&SparsePoly::var_pow(v, -(m * e as i32)));
                } else {
                    debug_assert!(m > 0);
                    self.insert_factor(SparsePoly::var(v), m as u32 * e);
                }
            }
        }
        if !core.is_one() {
            self.insert_factor(core, e);
        }
    }

    fn insert_factor(&mut self, f: SparsePoly, e: u32) {
        match self.den.binary_search_by(|(g, _)| g.cmp(&f)) {
            Ok(i) => self.den[i].1 += e,
            Err(i) => self.den.insert(i, (f, e)),
        }
    }

    /// Cancel denominator factors that exactly divide the numerator.
    fn cancel(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let mut i = 0;
        while i < self.den.len() {
            while self.den[i].1 > 0 {
                match self.num.try_div_exact(&self.den[i].0) {
                    Some(q) => {
                        self.num = q;
                        self.den[i].1 -= 1;
                    }
                    None => break,
                }
            }
            if self.den[i].1 == 0 {
                self.den.remove(i);
            } else {
                i += 1;
            }
        }
    }

    // ------------------------------------------------------------ accessors

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numer(&self) -> &SparsePoly {
        &self.num
    }

    /// Denominator factors `(factor, multiplicity)`.
    pub fn den_factors(&self) -> &[(SparsePoly, u32)] {
        &self.den
    }

    /// Expanded denominator polynomial.
    pub fn denom(&self) -> SparsePoly {
        let mut d = SparsePoly::one();
        for (f, e) in &self.den {
            d = d.mul(&f.pow(*e));
        }
        d
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    /// The polynomial value if the denominator is trivial.
    pub fn as_poly(&self) -> Option<&SparsePoly> {
        if self.den.is_empty() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<BigRat> {
        self.as_poly().and_then(|p| p.as_constant())
    }

    // ------------------------------------------------------------ arithmetic

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // lcm of the factor multisets.
        let mut lcm: Vec<(SparsePoly, u32)> = self.den.clone();
        for (g, e) in &other.den {
            match lcm.binary_search_by(|(h, _)| h.cmp(g)) {
                Ok(i) => lcm[i].1 = lcm[i].1.max(*e),
                Err(i) => lcm.insert(i, (g.clone(), *e)),
            }
        }
        let compl = |den: &[(SparsePoly, u32)]| -> SparsePoly {
            let mut c = SparsePoly::one();
            for (f, e) in &lcm {
                let have = den
                    .binary_search_by(|(h, _)| h.cmp(f))
                    .map(|i| den[i].1)
                    .unwrap_or(0);
                if *e > have {
                    c = c.mul(&f.pow(*e - have));
                }
            }
            c
        };
        let num = self
            .num
            .mul(&compl(&self.den))
            .add(&other.num.mul(&compl(&other.den)));
        let mut r = RationalFunction { num, den: lcm };
        r.cancel();
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RationalFunction::zero();
        }
        let mut r = RationalFunction { num: self.num.mul(&other.num), den: self.den.clone() };
        for (g, e) in &other.den {
            r.insert_factor(g.clone(), *e);
        }
        r.cancel();
        r
    }

    pub fn mul_poly(&self, p: &SparsePoly) -> Self {
        if p.is_zero() || self.is_zero() {
            return RationalFunction::zero();
        }
        let mut r = RationalFunction { num: self.num.mul(p), den: self.den.clone() };
        r.cancel();
        r
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        let mut r = RationalFunction { num: self.denom(), den: vec![] };
        r.push_den_factor(self.num.clone(), 1);
        r.cancel();
        r
    }

    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero");
        if self.is_zero() {
            return RationalFunction::zero();
        }
        let mut r = RationalFunction { num: self.num.mul(&other.denom()), den: self.den.clone() };
        r.push_den_factor(other.num.clone(), 1);
        r.cancel();
        r
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = RationalFunction::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Derivative with respect to `v` (quotient rule over the factored form).
    pub fn derivative(&self, v: Var) -> Self {
        // d/dv (n / prod f_i^{e_i})
        //   = n'/D - n * sum_i e_i f_i'/(f_i D)
        let mut out = RationalFunction { num: self.num.derivative(v), den: self.den.clone() };
        out.cancel();
        for (f, e) in &self.den {
            let fp = f.derivative(v);
            if fp.is_zero() {
                continue;
            }
            let mut term = RationalFunction {
                num: self.num.mul(&fp).scale(&BigRat::from(num::BigInt::from(*e))),
                den: self.den.clone(),
            };
            term.insert_factor(f.clone(), 1);
            term.cancel();
            out = out.sub(&term);
        }
        out
    }

    // ------------------------------------------------------------- equality

    /// Exact equality test: randomized-evaluation fast path, then exact
    /// cross-multiplication (via exact subtraction).
    pub fn eq(&self, other: &Self) -> bool {
        if self == other {
            return true;
        }
        // Fast path: evaluate both at a few pseudo-random rational points.
        for seed in [3_i64, 7, 13] {
            let assign = move |v: Var| -> BigRat {
                let k = match v {
                    Var::T1 => 1,
                    Var::T2 => 2,
                    Var::U => 3,
                    Var::S(i) => 3 + i as i64,
                };
                // Small distinct primes-ish offsets; avoids common zeros.
                crate::rat(seed + 4 * k + 1, seed + k)
            };
            match (self.eval(&assign), other.eval(&assign)) {
                (Some(a), Some(b)) => {
                    if a != b {
                        return false;
                    }
                }
                _ => continue,
            }
        }
        self.sub(other).is_zero()
    }

    /// Evaluate at rational values; `None` if the denominator vanishes.
    pub fn eval(&self, assignment: &dyn Fn(Var) -> BigRat) -> Option<BigRat> {
        let n = self.num.eval(assignment)?;
        let mut d = BigRat::one();
        for (f, e) in &self.den {
            let v = f.eval(assignment)?;
            if v.is_zero() {
                return None;
            }
            d *= num::pow::pow(v, *e as usize);
        }
        Some(n / d)
    }

    // --------------------------------------------------------------- theta

    /// Reduce modulo `(t1+t2)^2`: substitute `t2 = -t1 + eps` and truncate at
    /// `eps^2`. Errors with `PoleAtTheta` if any denominator factor vanishes
    /// identically at `t2 = -t1`.
    pub fn reduce_mod_theta2(&self) -> Result<DualTheta, ExactAlgError> {
        let (n0, n1) = self.num.theta_expand();
        let mut base = RationalFunction::from_poly(n0);
        let mut eps = RationalFunction::from_poly(n1);
        for (f, e) in &self.den {
            let (d0, d1) = f.theta_expand();
            if d0.is_zero() {
                return Err(ExactAlgError::PoleAtTheta);
            }
            for _ in 0..*e {
                // (b + e eps)/(d0 + d1 eps) = b/d0 + (e d0 - b d1)/d0^2 eps
                let new_base = RationalFunction { num: base.num.clone(), den: base.den.clone() };
                let mut nb = new_base;
                nb.push_den_factor(d0.clone(), 1);
                nb.cancel();
                let mut ne = eps.mul_poly(&d0).sub(&base.mul_poly(&d1));
                ne.push_den_factor(d0.clone(), 2);
                ne.cancel();
                base = nb;
                eps = ne;
            }
        }
        Ok(DualTheta::new(base, eps))
    }

    /// The value at `t2 = -t1` (the `mod (t1+t2)` reduction).
    pub fn reduce_mod_theta(&self) -> Result<RationalFunction, ExactAlgError> {
        Ok(self.reduce_mod_theta2()?.base().clone())
    }

    /// Substitute a polynomial value for a variable (requires nonnegative
    /// exponents of that variable in both numerator and denominator factors).
    pub fn substitute(&self, v: Var, value: &SparsePoly) -> RationalFunction {
        let mut out = RationalFunction::from_poly(self.num.substitute(v, value));
        for (f, e) in &self.den {
            out.push_den_factor(f.substitute(v, value), *e);
        }
        out.cancel();
        out
    }

    /// True if all `u`-exponents (numerator and factors) are even.
    pub fn u_exponents_even(&self) -> bool {
        self.num.u_exponents_even() && self.den.iter().all(|(f, _)| f.u_exponents_even())
    }
}

impl PartialOrd for RationalFunction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RationalFunction {
    fn cmp(&self, other: &Self) -> Ordering {
        self.num
            .cmp(&other.num)
            .then_with(|| self.den.cmp(&other.den))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / (", self.num)?;
        let mut first = true;
        for (g, e) in &self.den {
            if !first {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "({g})")?;
            } else {
                write!(f, "({g})^{e}")?;
            }
            first = false;
        }
        write!(f, ")")
    }
}

/// Spec-level equality operation (`ratfunc_eq`).
pub fn ratfunc_eq(a: &RationalFunction, b: &RationalFunction) -> bool {
    a.eq(b)
}
