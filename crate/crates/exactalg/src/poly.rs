//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept sorted in descending graded-lexicographic order over the
//! declared variable set, leading term first. Exponents are machine integers
//! with overflow checks; negative exponents are permitted only for `u`.

use crate::var::{self, Var, VarSet};
use crate::{BigInt, BigRat};
use num::{One, Signed, Zero};
use num_traits::ToPrimitive;
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Exponent vector; arity always equals the variable-set size.
pub type Expo = SmallVec<[i32; 6]>;

/// A sparse multivariate polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    vars: VarSet,
    /// Sorted descending in graded lex; no zero coefficients.
    terms: Vec<(Expo, BigRat)>,
}

/// Graded-lexicographic comparison: first by total degree, then entrywise
/// (earlier variables weigh more).
fn glex_cmp(a: &Expo, b: &Expo) -> Ordering {
    let ta: i64 = a.iter().map(|&e| e as i64).sum();
    let tb: i64 = b.iter().map(|&e| e as i64).sum();
    ta.cmp(&tb).then_with(|| a.cmp(b))
}

fn checked_add(a: i32, b: i32) -> i32 {
    a.checked_add(b).expect("exponent overflow")
}

impl SparsePoly {
    // ---------------------------------------------------------------- basic

    /// The zero polynomial over an empty variable set.
    pub fn zero() -> SparsePoly {
        SparsePoly { vars: var::intern(vec![]), terms: vec![] }
    }

    /// A constant polynomial.
    pub fn constant(c: BigRat) -> SparsePoly {
        let mut terms = vec![];
        if !c.is_zero() {
            terms.push((Expo::new(), c));
        }
        SparsePoly { vars: var::intern(vec![]), terms }
    }

    /// The polynomial `v`.
    pub fn var(v: Var) -> SparsePoly {
        SparsePoly {
            vars: var::intern(vec![v]),
            terms: vec![(SmallVec::from_slice(&[1]), BigRat::one())],
        }
    }

    /// The monomial `v^e` (`e` may be negative only for `u`).
    pub fn var_pow(v: Var, e: i32) -> SparsePoly {
        assert!(e >= 0 || v.laurent_allowed(), "negative exponent on {v}");
        if e == 0 {
            return SparsePoly::one();
        }
        SparsePoly {
            vars: var::intern(vec![v]),
            terms: vec![(SmallVec::from_slice(&[e]), BigRat::one())],
        }
    }

    /// The constant polynomial 1.
    pub fn one() -> SparsePoly {
        SparsePoly::constant(BigRat::one())
    }

    /// Build from raw term data over a variable set; normalizes ordering and
    /// drops zero coefficients.
    pub fn from_terms(vars: VarSet, terms: Vec<(Expo, BigRat)>) -> SparsePoly {
        let mut map: HashMap<Expo, BigRat> = HashMap::with_capacity(terms.len());
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent arity mismatch");
            for (i, &x) in e.iter().enumerate() {
                assert!(x >= 0 || vars[i].laurent_allowed(), "negative exponent on {}", vars[i]);
            }
            let entry = map.entry(e).or_insert_with(BigRat::zero);
            *entry += c;
        }
        let mut out: Vec<(Expo, BigRat)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out.sort_by(|a, b| glex_cmp(&b.0, &a.0));
        SparsePoly { vars, terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.iter().all(|&x| x == 0))
    }

    /// The constant value, if this polynomial is constant.
    pub fn as_constant(&self) -> Option<BigRat> {
        if self.terms.is_empty() {
            Some(BigRat::zero())
        } else if self.is_constant() && self.terms.len() == 1 {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    /// True if this is a single term `c * monomial`.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> &[(Expo, BigRat)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree of the leading (graded-lex greatest) term; 0 for zero.
    pub fn leading_degree(&self) -> i64 {
        self.terms.first().map(|(e, _)| e.iter().map(|&x| x as i64).sum()).unwrap_or(0)
    }

    /// Degree in a single variable (max exponent); None if the variable is
    /// absent from the variable set or the polynomial is zero.
    pub fn degree_in(&self, v: Var) -> Option<i32> {
        let idx = self.vars.iter().position(|&w| w == v)?;
        self.terms.iter().map(|(e, _)| e[idx]).max()
    }

    /// Minimum exponent of a variable across all terms (0 if absent).
    pub fn min_exp(&self, v: Var) -> i32 {
        match self.vars.iter().position(|&w| w == v) {
            Some(idx) => self.terms.iter().map(|(e, _)| e[idx]).min().unwrap_or(0),
            None => 0,
        }
    }

    // ------------------------------------------------------- var management

    /// Re-express over a superset of the current variables.
    pub fn with_vars(&self, vars: &VarSet) -> SparsePoly {
        if Arc::ptr_eq(&self.vars, vars) || self.vars == *vars {
            return self.clone();
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("with_vars: not a superset"))
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne: Expo = SmallVec::from_elem(0, vars.len());
                for (i, &x) in e.iter().enumerate() {
                    ne[map[i]] = x;
                }
                (ne, c.clone())
            })
            .collect();
        SparsePoly::from_terms(vars.clone(), terms)
    }

    /// Drop variables that do not occur in any term (canonical minimal set).
    pub fn shrink_vars(&self) -> SparsePoly {
        let used: Vec<usize> = (0..self.vars.len())
            .filter(|&i| self.terms.iter().any(|(e, _)| e[i] != 0))
            .collect();
        if used.len() == self.vars.len() {
            return self.clone();
        }
        let vars = var::intern(used.iter().map(|&i| self.vars[i]).collect());
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let ne: Expo = used.iter().map(|&i| e[i]).collect();
                (ne, c.clone())
            })
            .collect();
        SparsePoly { vars, terms }
    }

    fn unified(&self, other: &SparsePoly) -> (SparsePoly, SparsePoly) {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            (self.clone(), other.clone())
        } else {
            let u = var::union(&self.vars, &other.vars);
            (self.with_vars(&u), other.with_vars(&u))
        }
    }

    // ---------------------------------------------------------- arithmetic

    pub fn neg(&self) -> SparsePoly {
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        let (a, b) = self.unified(other);
        // Merge two sorted term lists.
        let mut out: Vec<(Expo, BigRat)> = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            match glex_cmp(&b.terms[j].0, &a.terms[i].0) {
                Ordering::Less => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a.terms[i].1 + &b.terms[j].1;
                    if !c.is_zero() {
                        out.push((a.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a.terms[i..]);
        out.extend_from_slice(&b.terms[j..]);
        SparsePoly { vars: a.vars, terms: out }
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        if self.is_zero() || other.is_zero() {
            return SparsePoly::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        let (a, b) = self.unified(other);
        let mut map: HashMap<Expo, BigRat> =
            HashMap::with_capacity(a.terms.len() * b.terms.len() / 2 + 1);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Expo = ea.iter().zip(eb.iter()).map(|(&x, &y)| checked_add(x, y)).collect();
                let c = ca * cb;
                let entry = map.entry(e).or_insert_with(BigRat::zero);
                *entry += c;
            }
        }
        let mut out: Vec<(Expo, BigRat)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out.sort_by(|x, y| glex_cmp(&y.0, &x.0));
        SparsePoly { vars: a.vars, terms: out }
    }

    pub fn scale(&self, c: &BigRat) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero();
        }
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> SparsePoly {
        let mut acc = SparsePoly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Partial derivative with respect to `v`.
    pub fn derivative(&self, v: Var) -> SparsePoly {
        let idx = match self.vars.iter().position(|&w| w == v) {
            Some(i) => i,
            None => return SparsePoly::zero(),
        };
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[idx] != 0)
            .map(|(e, c)| {
                let mut ne = e.clone();
                ne[idx] -= 1;
                (ne, c * BigRat::from(BigInt::from(e[idx])))
            })
            .collect();
        SparsePoly::from_terms(self.vars.clone(), terms)
    }

    /// Substitute a polynomial for a variable (exponents of `v` must be
    /// nonnegative in `self`).
    pub fn substitute(&self, v: Var, value: &SparsePoly) -> SparsePoly {
        let idx = match self.vars.iter().position(|&w| w == v) {
            Some(i) => i,
            None => return self.clone(),
        };
        let rest_vars = var::intern(
            self.vars.iter().copied().filter(|&w| w != v).collect::<Vec<_>>(),
        );
        let mut acc = SparsePoly::zero();
        for (e, c) in &self.terms {
            let k = e[idx];
            assert!(k >= 0, "substitute: negative exponent of {v}");
            let mut ne: Expo = SmallVec::with_capacity(e.len() - 1);
            for (i, &x) in e.iter().enumerate() {
                if i != idx {
                    ne.push(x);
                }
            }
            let base = SparsePoly::from_terms(rest_vars.clone(), vec![(ne, c.clone())]);
            acc = acc.add(&base.mul(&value.pow(k as u32)));
        }
        acc
    }

    /// Evaluate at rational values for every variable. `None` if a negative
    /// power of a variable evaluating to zero is required.
    pub fn eval(&self, assignment: &dyn Fn(Var) -> BigRat) -> Option<BigRat> {
        let vals: Vec<BigRat> = self.vars.iter().map(|&v| assignment(v)).collect();
        let mut total = BigRat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let v = &vals[i];
                if v.is_zero() {
                    if x < 0 {
                        return None;
                    }
                    term = BigRat::zero();
                    break;
                }
                let p = if x > 0 {
                    num::pow::pow(v.clone(), x as usize)
                } else {
                    num::pow::pow(v.clone().recip(), (-x) as usize)
                };
                term *= p;
            }
            total += term;
        }
        Some(total)
    }

    // -------------------------------------------------- content and division

    /// Split into `(content, primitive)`: content is a rational such that the
    /// primitive part has coprime integer coefficients and positive leading
    /// coefficient. Zero splits as `(0, 0)`.
    pub fn primitive(&self) -> (BigRat, SparsePoly) {
        if self.is_zero() {
            return (BigRat::zero(), SparsePoly::zero());
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            num_gcd = num::integer::gcd(num_gcd, c.numer().abs());
            den_lcm = num::integer::lcm(den_lcm, c.denom().clone());
        }
        let mut content = BigRat::new(num_gcd, den_lcm);
        if self.terms[0].1.is_negative() {
            content = -content;
        }
        let inv = content.clone().recip();
        (content, self.scale(&inv))
    }

    /// Exact division: returns `Some(q)` with `self = q * d`, else `None`.
    /// Handles Laurent exponents in `u` by shifting both operands first.
    pub fn try_div_exact(&self, d: &SparsePoly) -> Option<SparsePoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(SparsePoly::zero());
        }
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let (mut f, mut g) = self.unified(d);
        // Shift u-exponents to be nonnegative.
        let shift = |p: &SparsePoly, k: i32| -> SparsePoly {
            if k == 0 {
                return p.clone();
            }
            let idx = p.vars.iter().position(|&w| w == Var::U).unwrap();
            let terms = p
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut ne = e.clone();
                    ne[idx] = checked_add(ne[idx], k);
                    (ne, c.clone())
                })
                .collect();
            SparsePoly::from_terms(p.vars.clone(), terms)
        };
        // Applied shifts: f is multiplied by u^a, g by u^b.
        let a = (-f.min_exp(Var::U)).max(0);
        let b = (-g.min_exp(Var::U)).max(0);
        if a > 0 {
            f = shift(&f, a);
        }
        if b > 0 {
            g = shift(&g, b);
        }
        let lt_g = &g.terms[0];
        let mut quotient: Vec<(Expo, BigRat)> = vec![];
        let mut rem = f;
        while !rem.is_zero() {
            let lt_r = &rem.terms[0];
            // Componentwise divisibility of the leading monomials.
            let mut qe: Expo = SmallVec::with_capacity(lt_r.0.len());
            for (&a, &b) in lt_r.0.iter().zip(lt_g.0.iter()) {
                if a < b {
                    return None;
                }
                qe.push(a - b);
            }
            let qc = &lt_r.1 / &lt_g.1;
            let qterm = SparsePoly::from_terms(rem.vars.clone(), vec![(qe.clone(), qc.clone())]);
            rem = rem.sub(&qterm.mul(&g));
            quotient.push((qe, qc));
        }
        let mut q = SparsePoly::from_terms(g.vars.clone(), quotient);
        // Undo the applied shifts: self/d = (f_sh/u^a)/(g_sh/u^b) = u^{b-a} * (f_sh/g_sh).
        let net = b - a;
        if net != 0 {
            q = q.mul(&SparsePoly::var_pow(Var::U, net));
        }
        Some(q)
    }

    // ---------------------------------------------------- theta substitution

    /// Substitute `t2 = -t1 + eps` and expand to first order in `eps`,
    /// returning `(order-0 part, order-1 part)`, both free of `t2`.
    pub fn theta_expand(&self) -> (SparsePoly, SparsePoly) {
        let t2_idx = match self.vars.iter().position(|&w| w == Var::T2) {
            Some(i) => i,
            None => return (self.clone(), SparsePoly::zero()),
        };
        let new_vars = var::intern(
            self.vars
                .iter()
                .copied()
                .filter(|&w| w != Var::T2)
                .chain(std::iter::once(Var::T1))
                .collect::<Vec<_>>()
                .into_iter()
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect(),
        );
        let t1_pos = new_vars.iter().position(|&w| w == Var::T1).unwrap();
        let remap: Vec<usize> = self
            .vars
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != t2_idx)
            .map(|(_, v)| new_vars.iter().position(|w| w == v).unwrap())
            .collect();
        let mut p0: Vec<(Expo, BigRat)> = vec![];
        let mut p1: Vec<(Expo, BigRat)> = vec![];
        for (e, c) in &self.terms {
            let b = e[t2_idx];
            assert!(b >= 0, "t2 exponent must be nonnegative");
            let mut ne: Expo = SmallVec::from_elem(0, new_vars.len());
            let mut k = 0;
            for (i, &x) in e.iter().enumerate() {
                if i == t2_idx {
                    continue;
                }
                ne[remap[k]] = checked_add(ne[remap[k]], x);
                k += 1;
            }
            // (-t1 + eps)^b = (-t1)^b + b (-t1)^{b-1} eps + O(eps^2)
            let mut e0 = ne.clone();
            e0[t1_pos] = checked_add(e0[t1_pos], b);
            let sign0 = if b % 2 == 0 { BigRat::one() } else { -BigRat::one() };
            p0.push((e0, c * sign0));
            if b > 0 {
                let mut e1 = ne;
                e1[t1_pos] = checked_add(e1[t1_pos], b - 1);
                let sign1 = if (b - 1) % 2 == 0 { BigRat::one() } else { -BigRat::one() };
                p1.push((e1, c * sign1 * BigRat::from(BigInt::from(b))));
            }
        }
        (
            SparsePoly::from_terms(new_vars.clone(), p0),
            SparsePoly::from_terms(new_vars, p1),
        )
    }

    // --------------------------------------------------------------- display

    /// True if every `u`-exponent is even (so the value is a function of
    /// `q = -u^2` alone).
    pub fn u_exponents_even(&self) -> bool {
        match self.vars.iter().position(|&w| w == Var::U) {
            None => true,
            Some(idx) => self.terms.iter().all(|(e, _)| e[idx] % 2 == 0),
        }
    }
}

impl PartialOrd for SparsePoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary total order used only for canonical sorting of denominator
/// factors: compare shrunken variable sets, then term lists.
impl Ord for SparsePoly {
    fn cmp(&self, other: &Self) -> Ordering {
        let a = self.shrink_vars();
        let b = other.shrink_vars();
        a.vars
            .cmp(&b.vars)
            .then_with(|| a.terms.len().cmp(&b.terms.len()))
            .then_with(|| {
                for ((ea, ca), (eb, cb)) in a.terms.iter().zip(b.terms.iter()) {
                    let o = ea.cmp(eb).then_with(|| ca.cmp(cb));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                Ordering::Equal
            })
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let in_q = self.u_exponents_even();
        let mut first = true;
        for (e, c) in &self.terms {
            let mut factors: Vec<String> = vec![];
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let v = self.vars[i];
                if v == Var::U && in_q {
                    // u^{2k} = (-q)^k = (-1)^k q^k; fold the sign into the
                    // coefficient below via a marker is messy, so print (-q).
                    let k = x / 2;
                    if k == 1 {
                        factors.push("(-q)".into());
                    } else {
                        factors.push(format!("(-q)^{k}"));
                    }
                } else if x == 1 {
                    factors.push(v.to_string());
                } else {
                    factors.push(format!("{v}^{x}"));
                }
            }
            let mag = c.abs();
            let coeff = if mag.is_one() && !factors.is_empty() { String::new() } else { mag.to_string() };
            let sep = if first {
                if c.is_negative() { "-" } else { "" }
            } else if c.is_negative() {
                " - "
            } else {
                " + "
            };
            let body = if coeff.is_empty() {
                factors.join("*")
            } else if factors.is_empty() {
                coeff
            } else {
                format!("{}*{}", coeff, factors.join("*"))
            };
            write!(f, "{sep}{body}")?;
            first = false;
        }
        Ok(())
    }
}

/// Convenience: the polynomial `t1 + t2`.
pub fn theta() -> SparsePoly {
    SparsePoly::var(Var::T1).add(&SparsePoly::var(Var::T2))
}

/// Convenience: `(-q)^k` as `u^{2k}`.
pub fn neg_q_pow(k: i64) -> SparsePoly {
    SparsePoly::var_pow(Var::U, (2 * k).to_i32().expect("exponent overflow"))
}
