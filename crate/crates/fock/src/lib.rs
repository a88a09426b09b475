//! The Fock space of the surface: vectors, Heisenberg operators, the graded
//! inner product, Gram matrices, and label-basis changes.
//!
//! A [`FockVector`] is a finite combination of *monomial* vectors
//! `p_{-mu_1}(g_{l_1}) ... p_{-mu_r}(g_{l_r}) v_empty`, keyed by the
//! cohomology-weighted partition `{(mu_i, l_i)}`; labels index an abstract
//! cohomology basis whose Poincare pairing is carried by the enclosing
//! [`FockSpace`]. The *normalized* Nakajima basis vector divides the
//! monomial by `z(mu)` ([`FockSpace::nakajima_vector`]); operator
//! application itself is unnormalized.
//!
//! Sign conventions (frozen here and validated downstream against the
//! quantum-operator golden matrices): commutator
//! `[p_k(g1), p_l(g2)] = -k delta_{k+l} <g1,g2>`, annihilators kill the
//! vacuum, and the adjoint is `p_k(g)^* = (-1)^k p_{-k}(g)`.

use combinat::WeightedPartition;
use exactalg::{int, BigRat, RationalFunction};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use surface::SurfaceData;

/// A finite combination of Fock monomial vectors of a single grade.
#[derive(Debug, Clone, PartialEq)]
pub struct FockVector {
    grade: u32,
    terms: BTreeMap<WeightedPartition, RationalFunction>,
}

impl FockVector {
    pub fn zero(grade: u32) -> Self {
        FockVector { grade, terms: BTreeMap::new() }
    }

    pub fn vacuum() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(WeightedPartition::empty(), RationalFunction::one());
        FockVector { grade: 0, terms }
    }

    /// The unnormalized monomial vector for `mu`.
    pub fn monomial(mu: WeightedPartition) -> Self {
        let mut terms = BTreeMap::new();
        let grade = mu.size();
        terms.insert(mu, RationalFunction::one());
        FockVector { grade, terms }
    }

    pub fn grade(&self) -> u32 {
        self.grade
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the monomial vector `mu`.
    pub fn coeff(&self, mu: &WeightedPartition) -> RationalFunction {
        self.terms.get(mu).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeightedPartition, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &FockVector) -> FockVector {
        // The zero vector is grade-flexible.
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        assert_eq!(self.grade, other.grade, "grade mismatch");
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.accumulate(mu.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FockVector) -> FockVector {
        self.add(&other.scale_rf(&RationalFunction::one().neg()))
    }

    pub fn scale_rf(&self, f: &RationalFunction) -> FockVector {
        if f.is_zero() {
            return FockVector::zero(self.grade);
        }
        FockVector {
            grade: self.grade,
            terms: self.terms.iter().map(|(mu, c)| (mu.clone(), c.mul(f))).collect(),
        }
    }

    pub fn scale(&self, c: &BigRat) -> FockVector {
        self.scale_rf(&RationalFunction::constant(c.clone()))
    }

    fn accumulate(&mut self, mu: WeightedPartition, c: RationalFunction) {
        assert_eq!(mu.size(), self.grade, "grade mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mu) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// JSON object `{monomial-string: rationalfunction}`.
    pub fn to_json(&self) -> Value {
        let map: serde_json::Map<String, Value> = self
            .terms
            .iter()
            .map(|(mu, c)| (mu.to_string(), exactalg::ratfunc_to_json(c)))
            .collect();
        json!(map)
    }
}

/// A Heisenberg operator word: `(mode, label coordinates)` pairs applied
/// right-to-left; mode `k > 0` annihilates, `k < 0` creates, and the label
/// coordinates expand the cohomology class over the space's label basis.
pub type HeisenbergWord = Vec<(i32, Vec<RationalFunction>)>;

/// The Fock space over a fixed label basis: the basis size and the Poincare
/// pairing `<g_a, g_b>` of the label classes is all the operator calculus
/// needs.
#[derive(Debug, Clone)]
pub struct FockSpace {
    pairing: Vec<Vec<RationalFunction>>,
}

impl FockSpace {
    pub fn new(pairing: Vec<Vec<RationalFunction>>) -> Self {
        let b = pairing.len();
        assert!(b >= 1 && pairing.iter().all(|r| r.len() == b));
        FockSpace { pairing }
    }

    /// Label basis `(1, omega_1..omega_n)` with the pairing computed by
    /// localization on the surface.
    pub fn over_surface(s: &SurfaceData) -> Self {
        let cls: Vec<_> = (0..=s.n())
            .map(|c| if c == 0 { s.one_class() } else { s.omega_class(c) })
            .collect();
        let pairing = cls
            .iter()
            .map(|a| cls.iter().map(|b| s.pairing(a, b)).collect())
            .collect();
        FockSpace::new(pairing)
    }

    /// Number of label classes.
    pub fn basis_size(&self) -> usize {
        self.pairing.len()
    }

    pub fn label_pairing(&self, a: usize, b: usize) -> &RationalFunction {
        &self.pairing[a][b]
    }

    /// Pairing of two classes given in label coordinates.
    fn pair_coords(&self, a: &[RationalFunction], b: &[RationalFunction]) -> RationalFunction {
        let mut acc = RationalFunction::zero();
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if !cb.is_zero() && !self.pairing[i][j].is_zero() {
                    acc = acc.add(&ca.mul(cb).mul(&self.pairing[i][j]));
                }
            }
        }
        acc
    }

    /// Coordinate vector of a pure label.
    pub fn label(&self, a: usize) -> Vec<RationalFunction> {
        let mut v = vec![RationalFunction::zero(); self.basis_size()];
        v[a] = RationalFunction::one();
        v
    }

    /// The normalized Nakajima basis vector `(1/z(mu)) p_{-mu} v_empty`.
    pub fn nakajima_vector(&self, mu: &WeightedPartition) -> FockVector {
        FockVector::monomial(mu.clone()).scale(&mu.zfactor().recip())
    }

    // --------------------------------------------------------------- operators

    /// Apply `p_k(gamma)` with `gamma` in label coordinates. Maps grade `m`
    /// to grade `m - k`; requires `m - k >= 0`.
    pub fn apply_p(&self, k: i32, gamma: &[RationalFunction], v: &FockVector) -> FockVector {
        assert!(k != 0, "mode must be nonzero");
        assert_eq!(gamma.len(), self.basis_size());
        let new_grade = v.grade as i64 - k as i64;
        if new_grade < 0 {
            // Annihilating below the vacuum gives zero.
            return FockVector::zero(0);
        }
        let mut out = FockVector::zero(new_grade as u32);
        for (mu, c) in &v.terms {
            if k < 0 {
                // Creation: multiply the monomial by p_{-b}(gamma).
                let b = (-k) as u32;
                for (a, ca) in gamma.iter().enumerate() {
                    if ca.is_zero() {
                        continue;
                    }
                    let mut pairs = mu.pairs().to_vec();
                    pairs.push((b, a));
                    out.accumulate(WeightedPartition::new(pairs), c.mul(ca));
                }
            } else {
                // Annihilation: commute p_k past each matching creator; the
                // surviving term for occurrence (k, l) carries
                // -k <gamma, g_l> times the monomial with that pair removed.
                for (idx, &(part, l)) in mu.pairs().iter().enumerate() {
                    if part != k as u32 {
                        continue;
                    }
                    let bracket = self.pair_coords(gamma, &self.label(l)).scale(&int(-(k as i64)));
                    if bracket.is_zero() {
                        continue;
                    }
                    let mut pairs = mu.pairs().to_vec();
                    pairs.remove(idx);
                    out.accumulate(WeightedPartition::new(pairs), c.mul(&bracket));
                }
            }
        }
        out
    }

    /// Apply a word right-to-left.
    pub fn apply_word(&self, word: &HeisenbergWord, v: &FockVector) -> FockVector {
        word.iter()
            .rev()
            .fold(v.clone(), |acc, (k, gamma)| self.apply_p(*k, gamma, &acc))
    }

    // ----------------------------------------------------------- inner product

    /// The graded Fock pairing, computed by converting the bra to
    /// annihilators via `p_{-b}(g)^* = (-1)^b p_b(g)`.
    pub fn inner_product(&self, a: &FockVector, b: &FockVector) -> RationalFunction {
        assert_eq!(a.grade, b.grade, "grade mismatch");
        let mut acc = RationalFunction::zero();
        for (mu, ca) in &a.terms {
            let mut w = b.clone();
            let mut sign = 1i64;
            for &(part, l) in mu.pairs() {
                sign *= if part % 2 == 0 { 1 } else { -1 };
                w = self.apply_p(part as i32, &self.label(l), &w);
                if w.is_zero() {
                    break;
                }
            }
            let vac = w.coeff(&WeightedPartition::empty());
            if !vac.is_zero() {
                acc = acc.add(&vac.mul(ca).scale(&int(sign)));
            }
        }
        acc
    }

    /// Gram matrix of the normalized Nakajima basis of grade `m`, in the
    /// `combinat::enumerate_weighted` order.
    pub fn gram_matrix(&self, m: u32) -> Vec<Vec<RationalFunction>> {
        let basis = combinat::enumerate_weighted(m, self.basis_size());
        let vecs: Vec<_> = basis.iter().map(|mu| self.nakajima_vector(mu)).collect();
        vecs.iter()
            .map(|a| vecs.iter().map(|b| self.inner_product(a, b)).collect())
            .collect()
    }

    // ------------------------------------------------------------- relabelling

    /// Rewrite every label through a change of label basis:
    /// `transform[a]` expands the old label `a` over the new basis. The
    /// returned vector lives in the Fock space over the new basis.
    pub fn relabel_basis(v: &FockVector, transform: &[Vec<RationalFunction>]) -> FockVector {
        let mut out = FockVector::zero(v.grade);
        for (mu, c) in &v.terms {
            // Multilinear expansion over the labels of mu.
            let mut expanded: Vec<(Vec<(u32, usize)>, RationalFunction)> = vec![(vec![], c.clone())];
            for &(part, l) in mu.pairs() {
                let mut next = vec![];
                for (pairs, coeff) in &expanded {
                    for (new_l, t) in transform[l].iter().enumerate() {
                        if t.is_zero() {
                            continue;
                        }
                        let mut p = pairs.clone();
                        p.push((part, new_l));
                        next.push((p, coeff.mul(t)));
                    }
                }
                expanded = next;
            }
            for (pairs, coeff) in expanded {
                out.accumulate(WeightedPartition::new(pairs), coeff);
            }
        }
        out
    }
}
