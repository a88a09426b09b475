//! The `E^s_alpha(q)` matrix-element engine.
//!
//! The shifted quadratic operators `E^s_alpha(q)` obey a closed commutation
//! law with the Heisenberg operators,
//! `[p_r(gamma), E^s_alpha] = (alpha,gamma)(u^{-r} - u^{r}) E^{r+s}_alpha`
//! (`u^2 = -q`), annihilators kill the vacuum on both sides, and the only
//! surviving terminal scalar is `<v|E^0|v> = q/(1+q)^2 = -u^2/(1-u^2)^2`.
//! Every sandwich `<v| p_{a_1}(g_..)..  E^s  p_{-b_1}(g_..)..|v>` therefore
//! evaluates by a terminating rewrite; the engine memoizes it on canonical
//! keys.
//!
//! `E_alpha = E^0_alpha - q/(1+q)^2 Id` on the grade-`m` space (the finite
//! Cartan acts by zero there), and its coefficient matrix in the normalized
//! Nakajima basis must be a Laurent polynomial in `(-q)` with exponents in
//! `[-(m-1), m-1]`; a surviving `(1+q)`-type denominator is a hard internal
//! error.

use crate::{HilbContext, QuantumError};
use combinat::WeightedPartition;
use exactalg::{int, linalg, RationalFunction, SparsePoly, Var};
use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use surface::{Root, SurfaceData};

type Word = Vec<(u32, usize)>;

/// Memoized evaluator of `E^s_alpha` sandwiches over a fixed label basis.
///
/// The label basis is abstract: all the recursion needs is the Poincare
/// pairing `<g_a, g_b>` of the labels and the root pairings `(alpha, g_a)`.
pub struct EEngine {
    pairing: Vec<Vec<RationalFunction>>,
    root_pair: Vec<RationalFunction>,
    memo: RefCell<HashMap<(Word, i32, Word), RationalFunction>>,
}

/// `u^{-r} - u^{r}`, the scalar in the commutation law.
fn u_bracket(r: i32) -> SparsePoly {
    SparsePoly::var_pow(Var::U, -r).sub(&SparsePoly::var_pow(Var::U, r))
}

/// The vacuum value `q/(1+q)^2 = -u^2/(1-u^2)^2`.
pub fn vacuum_value() -> RationalFunction {
    let u2 = SparsePoly::var_pow(Var::U, 2);
    RationalFunction::new(u2.neg(), SparsePoly::one().sub(&u2).pow(2))
}

impl EEngine {
    pub fn new(pairing: Vec<Vec<RationalFunction>>, root_pair: Vec<RationalFunction>) -> Self {
        assert_eq!(pairing.len(), root_pair.len());
        EEngine { pairing, root_pair, memo: RefCell::new(HashMap::new()) }
    }

    /// Engine over the `(1, omega_1..omega_n)` label basis.
    pub fn over_omega_basis(s: &SurfaceData, alpha: Root) -> Self {
        let space = fock::FockSpace::over_surface(s);
        let pairing = (0..space.basis_size())
            .map(|a| (0..space.basis_size()).map(|b| space.label_pairing(a, b).clone()).collect())
            .collect();
        let root_pair = (0..=s.n())
            .map(|c| {
                let cls = if c == 0 { s.one_class() } else { s.omega_class(c) };
                s.root_pairing(alpha, &cls)
            })
            .collect();
        EEngine::new(pairing, root_pair)
    }

    /// Engine over the fixed-point label basis `[p_1]..[p_{n+1}]`.
    pub fn over_fixed_points(s: &SurfaceData, alpha: Root) -> Self {
        let pts = s.points();
        let mut pairing = vec![vec![RationalFunction::zero(); pts]; pts];
        for (i, row) in pairing.iter_mut().enumerate() {
            row[i] = RationalFunction::from_poly(s.wl(i + 1).mul(s.wr(i + 1)));
        }
        let root_pair =
            (1..=pts).map(|i| s.root_pairing(alpha, &s.fixed_point_class(i))).collect();
        EEngine::new(pairing, root_pair)
    }

    /// The algebraic sandwich `<v| p_{a_1}(g_..) .. E^s p_{-b_1}(g_..) .. |v>`
    /// with annihilator parts `ann` and creator parts `cre` given as
    /// `(part, label)` pairs.
    pub fn sandwich(&self, ann: &[(u32, usize)], s: i32, cre: &[(u32, usize)]) -> RationalFunction {
        // Weight bookkeeping: E^s lowers the grade by s, so the sandwich
        // vanishes unless grade(bra) = grade(ket) - s.
        let asum: i64 = ann.iter().map(|&(p, _)| p as i64).sum();
        let csum: i64 = cre.iter().map(|&(p, _)| p as i64).sum();
        if asum != csum - s as i64 {
            return RationalFunction::zero();
        }
        let mut a = ann.to_vec();
        let mut c = cre.to_vec();
        a.sort_unstable();
        c.sort_unstable();
        self.eval(&a, s, &c)
    }

    fn eval(&self, ann: &[(u32, usize)], s: i32, cre: &[(u32, usize)]) -> RationalFunction {
        let key = (ann.to_vec(), s, cre.to_vec());
        if let Some(v) = self.memo.borrow().get(&key) {
            return v.clone();
        }
        let value = self.eval_uncached(ann, s, cre);
        self.memo.borrow_mut().insert(key, value.clone());
        value
    }

    fn eval_uncached(&self, ann: &[(u32, usize)], s: i32, cre: &[(u32, usize)]) -> RationalFunction {
        if ann.is_empty() && cre.is_empty() {
            return if s == 0 { vacuum_value() } else { RationalFunction::zero() };
        }
        if let Some((&(r, a), rest)) = ann.split_first() {
            // Commute p_r(g_a) rightward past E^s ...
            let mut acc = if self.root_pair[a].is_zero() {
                RationalFunction::zero()
            } else {
                self.root_pair[a]
                    .mul_poly(&u_bracket(r as i32))
                    .mul(&self.eval(rest, s + r as i32, cre))
            };
            // ... and past each matching creator (Heisenberg commutator).
            for (idx, &(b, c)) in cre.iter().enumerate() {
                if b != r || self.pairing[a][c].is_zero() {
                    continue;
                }
                let mut rest_cre = cre.to_vec();
                rest_cre.remove(idx);
                let bracket = self.pairing[a][c].scale(&int(-(r as i64)));
                acc = acc.add(&bracket.mul(&self.eval(rest, s, &rest_cre)));
            }
            return acc;
        }
        // No annihilators left: commute E^s past the first creator; the
        // stray creator is killed by the left vacuum.
        let (&(b, c), rest) = cre.split_first().expect("nonempty");
        if self.root_pair[c].is_zero() {
            return RationalFunction::zero();
        }
        self.root_pair[c]
            .mul_poly(&u_bracket(b as i32))
            .mul(&self.eval(&[], s - b as i32, rest))
    }

    /// Bilinear value `<mono_bra | E^s_alpha | mono_ket>` in the graded Fock
    /// pairing (the bra is converted to annihilators via the adjoint
    /// `p_{-k}(g)^* = (-1)^k p_k(g)`).
    pub fn bilinear(
        &self,
        bra: &WeightedPartition,
        s: i32,
        ket: &WeightedPartition,
    ) -> RationalFunction {
        let sign: i64 = if bra.size() % 2 == 0 { 1 } else { -1 };
        self.sandwich(bra.pairs(), s, ket.pairs()).scale(&int(sign))
    }
}

/// Bilinear matrix of `E_alpha = E^0_alpha - q/(1+q)^2 Id` on the grade-`m`
/// normalized Nakajima basis of the context.
pub fn e_alpha_bilinear(ctx: &HilbContext, alpha: Root) -> Vec<Vec<RationalFunction>> {
    assert_eq!(alpha.d, 1, "multiples are generated by the scaling law");
    let engine = EEngine::over_omega_basis(&ctx.surface, alpha);
    let vac = vacuum_value();
    let n = ctx.basis.len();
    let mut out = vec![vec![RationalFunction::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let z = RationalFunction::constant(
                (ctx.basis[i].zfactor() * ctx.basis[j].zfactor()).recip(),
            );
            let e0 = engine.bilinear(&ctx.basis[i], 0, &ctx.basis[j]).mul(&z);
            out[i][j] = e0.sub(&vac.mul(&ctx.gram[i][j]));
        }
    }
    out
}

/// Coefficient matrix of `E_alpha` on grade `m` in the normalized Nakajima
/// basis: the Gram-inverse conversion of [`e_alpha_bilinear`]. Entrywise a
/// Laurent polynomial in `(-q)` over `Q(t1,t2)` with exponents in
/// `[-(m-1), m-1]`; anything else is a hard internal error.
pub fn e_alpha_matrix(
    ctx: &HilbContext,
    alpha: Root,
) -> Result<Vec<Vec<RationalFunction>>, QuantumError> {
    let b = e_alpha_bilinear(ctx, alpha);
    let m = linalg::matmul_rf(&ctx.gram_inv, &b);
    for row in &m {
        for entry in row {
            check_laurent(entry, ctx.m)?;
        }
    }
    Ok(m)
}

fn involves_u(p: &SparsePoly) -> bool {
    let p = p.shrink_vars();
    p.vars().iter().any(|&v| v == Var::U)
}

pub(crate) fn check_laurent(entry: &RationalFunction, m: u32) -> Result<(), QuantumError> {
    if entry.den_factors().iter().any(|(f, _)| involves_u(f)) || !entry.u_exponents_even() {
        return Err(QuantumError::DenominatorSurvived);
    }
    if !entry.is_zero() {
        let num = entry.numer();
        let lo = num.min_exp(Var::U) as i64 / 2;
        let hi = num.degree_in(Var::U).unwrap_or(0) as i64 / 2;
        let w = m as i64 - 1;
        if lo < -w || hi > w {
            return Err(QuantumError::DenominatorSurvived);
        }
    }
    Ok(())
}

/// Split a matrix of `(-q)`-Laurent entries into its Laurent coefficient
/// matrices over `Q(t1,t2)`, keyed by the exponent `k` of `(-q)^k`.
pub fn laurent_coefficients(
    matrix: &[Vec<RationalFunction>],
) -> BTreeMap<i64, Vec<Vec<RationalFunction>>> {
    let n = matrix.len();
    let mut out: BTreeMap<i64, Vec<Vec<RationalFunction>>> = BTreeMap::new();
    for (i, row) in matrix.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            if entry.is_zero() {
                continue;
            }
            let den = RationalFunction::from_poly(entry.denom());
            let num = entry.numer().shrink_vars();
            let upos = num.vars().iter().position(|&v| v == Var::U);
            // Group numerator terms by u-exponent.
            let mut buckets: BTreeMap<i64, Vec<(Vec<i32>, exactalg::BigRat)>> = BTreeMap::new();
            for (e, c) in num.terms() {
                let (k, rest): (i64, Vec<i32>) = match upos {
                    None => (0, e.to_vec()),
                    Some(p) => {
                        assert_eq!(e[p] % 2, 0, "entry must be a function of (-q)");
                        let mut rest = e.to_vec();
                        rest[p] = 0;
                        (e[p] as i64 / 2, rest)
                    }
                };
                buckets.entry(k).or_default().push((rest, c.clone()));
            }
            for (k, terms) in buckets {
                let part = SparsePoly::from_terms(
                    num.vars().clone(),
                    terms.into_iter().map(|(e, c)| (e.into(), c)).collect(),
                );
                let coeff = RationalFunction::from_poly(part).div(&den);
                let mat = out
                    .entry(k)
                    .or_insert_with(|| vec![vec![RationalFunction::zero(); n]; n]);
                mat[i][j] = coeff;
            }
        }
    }
    out
}
