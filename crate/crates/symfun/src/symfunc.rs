//! Symmetric functions in the power-sum basis; Schur expansion by the
//! Murnaghan-Nakayama rule; the involution `omega`.

use combinat::Partition;
use exactalg::{int, rat, BigRat, RationalFunction};
use std::collections::BTreeMap;

/// A symmetric function as a finite combination of power sums `p_mu`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymFunc {
    terms: BTreeMap<Partition, RationalFunction>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc { terms: BTreeMap::new() }
    }

    /// The constant `1` (empty power-sum product).
    pub fn one() -> Self {
        SymFunc::monomial(Partition::empty(), RationalFunction::one())
    }

    pub fn monomial(mu: Partition, c: RationalFunction) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mu, c);
        }
        SymFunc { terms }
    }

    pub fn p(mu: Partition) -> Self {
        SymFunc::monomial(mu, RationalFunction::one())
    }

    pub fn coeff(&self, mu: &Partition) -> RationalFunction {
        self.terms.get(mu).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn accumulate(&mut self, mu: Partition, c: RationalFunction) {
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

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.accumulate(mu.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.scale_rf(&RationalFunction::one().neg()))
    }

    pub fn scale_rf(&self, f: &RationalFunction) -> SymFunc {
        if f.is_zero() {
            return SymFunc::zero();
        }
        SymFunc {
            terms: self.terms.iter().map(|(mu, c)| (mu.clone(), c.mul(f))).collect(),
        }
    }

    pub fn scale(&self, c: &BigRat) -> SymFunc {
        self.scale_rf(&RationalFunction::constant(c.clone()))
    }

    /// Product (power sums multiply by concatenation of partitions).
    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (mu, a) in &self.terms {
            for (nu, b) in &other.terms {
                let mut parts = mu.parts().to_vec();
                parts.extend_from_slice(nu.parts());
                out.accumulate(Partition::new(parts), a.mul(b));
            }
        }
        out
    }

    /// The involution `omega`: `p_mu -> (-1)^{|mu| - l(mu)} p_mu`, under
    /// which `omega(s_lambda) = s_{lambda'}`.
    pub fn omega(&self) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .map(|(mu, c)| {
                    let sign = if (mu.size() as i64 - mu.len() as i64) % 2 == 0 { 1 } else { -1 };
                    (mu.clone(), c.scale(&int(sign)))
                })
                .collect(),
        }
    }
}

/// Irreducible symmetric-group character `chi^lambda(mu)` by the
/// Murnaghan-Nakayama rule, implemented on first-column hook lengths (beta
/// numbers): removing a border strip of length `r` moves a bead down by `r`;
/// the sign counts the beads jumped over.
fn character(lambda: &Partition, mu: &[u32]) -> i64 {
    fn go(beta: &mut Vec<u64>, mu: &[u32]) -> i64 {
        let Some((&r, rest)) = mu.split_first() else {
            return 1;
        };
        let r = r as u64;
        let mut total = 0;
        for idx in 0..beta.len() {
            let b = beta[idx];
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            // Height of the strip = number of beads strictly between b-r and b.
            let ht = beta.iter().filter(|&&x| x > b - r && x < b).count();
            let sign = if ht % 2 == 0 { 1 } else { -1 };
            beta[idx] = b - r;
            total += sign * go(beta, rest);
            beta[idx] = b;
        }
        total
    }
    let t = lambda.len().max(1);
    let mut beta: Vec<u64> = (1..=t)
        .map(|i| lambda.parts().get(i - 1).copied().unwrap_or(0) as u64 + (t - i) as u64)
        .collect();
    go(&mut beta, mu)
}

/// Schur polynomial in power sums: `s_lambda = sum_mu chi^lambda(mu)/z_mu p_mu`.
pub fn schur_in_powersums(lambda: &Partition) -> SymFunc {
    let mut out = SymFunc::zero();
    for mu in Partition::enumerate(lambda.size()) {
        let chi = character(lambda, mu.parts());
        if chi != 0 {
            let c = rat(chi, 1) / mu.zfactor();
            out.accumulate(mu, RationalFunction::constant(c));
        }
    }
    out
}

/// `dim lambda = chi^lambda(1^m)`, the number of standard Young tableaux.
pub fn dimension(lambda: &Partition) -> i64 {
    character(lambda, &vec![1; lambda.size() as usize])
}
