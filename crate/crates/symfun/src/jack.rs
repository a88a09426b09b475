//! Integral Jack polynomials by the eigenoperator method.
//!
//! The parameter-deformed Laplace-Beltrami operator
//! `D = (a/2) sum ab p_{a+b} d_a d_b + (1/2) sum (a+b) p_a p_b d_{a+b}
//!    + ((a-1)/2) sum a(a-1) p_a d_a`
//! (`d_k = d/dp_k`, parameter `a = alpha`) is dominance-triangular in the
//! monomial basis with eigenvalue `alpha n(lambda') - n(lambda)` on
//! `J_lambda`; the expansion is obtained by a triangular solve and
//! normalized so the coefficient of `p_1^{|lambda|}` is `1`.

use crate::symfunc::SymFunc;
use crate::SymfunError;
use combinat::{dominance_leq, Partition};
use exactalg::{int, linalg, rat, BigRat, RationalFunction};
use num::Zero;
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::Mutex;

/// The surface's per-fixed-point Jack parameter `theta = wL_i / wR_i`.
#[derive(Debug, Clone)]
pub struct JackParam {
    pub theta: RationalFunction,
}

impl JackParam {
    pub fn new(theta: RationalFunction) -> Self {
        JackParam { theta }
    }

    /// The classical Jack parameter: `alpha = -theta`. (Frozen conversion:
    /// at the specialization `t2 = -t1` every `theta_i` is `-1`, so
    /// `alpha = 1` is the Schur point.)
    pub fn alpha(&self) -> RationalFunction {
        self.theta.neg()
    }
}

/// Power-sum products expanded in the monomial basis, per degree:
/// `transition(d)[mu][nu]` = coefficient of `m_nu` in `p_mu`, with both
/// indices in the `Partition::enumerate(d)` order.
fn transition(d: u32) -> Vec<Vec<BigRat>> {
    static CACHE: Lazy<Mutex<HashMap<u32, Vec<Vec<BigRat>>>>> =
        Lazy::new(|| Mutex::new(HashMap::new()));
    if let Some(r) = CACHE.lock().unwrap().get(&d) {
        return r.clone();
    }
    let basis = Partition::enumerate(d);
    let index: HashMap<Partition, usize> =
        basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let rows: Vec<Vec<BigRat>> = basis
        .iter()
        .map(|mu| {
            // Expand p_mu in monomials by multiplying in one part at a time:
            // coefficient of m_sigma in p_r m_nu counts the parts of sigma
            // that can absorb r and leave nu.
            let mut acc: HashMap<Partition, BigRat> = HashMap::new();
            acc.insert(Partition::empty(), int(1));
            for &r in mu.parts() {
                let mut next: HashMap<Partition, BigRat> = HashMap::new();
                for (nu, c) in &acc {
                    // New part r.
                    let mut parts = nu.parts().to_vec();
                    parts.push(r);
                    let sigma = Partition::new(parts);
                    let mult = sigma.parts().iter().filter(|&&v| v == r).count() as i64;
                    *next.entry(sigma).or_insert_with(BigRat::zero) += c * int(mult);
                    // Grow an existing part v -> v + r (one distinct value at
                    // a time).
                    let mut seen = vec![];
                    for &v in nu.parts() {
                        if seen.contains(&v) {
                            continue;
                        }
                        seen.push(v);
                        let mut parts = nu.parts().to_vec();
                        let pos = parts.iter().position(|&x| x == v).unwrap();
                        parts[pos] = v + r;
                        let sigma = Partition::new(parts);
                        let mult =
                            sigma.parts().iter().filter(|&&x| x == v + r).count() as i64;
                        *next.entry(sigma).or_insert_with(BigRat::zero) += c * int(mult);
                    }
                }
                acc = next;
            }
            let mut row = vec![BigRat::zero(); basis.len()];
            for (nu, c) in acc {
                row[index[&nu]] = c;
            }
            row
        })
        .collect();
    CACHE.lock().unwrap().insert(d, rows.clone());
    rows
}

/// Matrix of the Laplace-Beltrami operator on the power-sum basis of degree
/// `d`: column `nu` holds the expansion of `D p_nu`.
fn lb_matrix_p(d: u32, alpha: &RationalFunction) -> Vec<Vec<RationalFunction>> {
    let basis = Partition::enumerate(d);
    let index: HashMap<Partition, usize> =
        basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut m = vec![vec![RationalFunction::zero(); basis.len()]; basis.len()];
    let half = rat(1, 2);
    for (col, nu) in basis.iter().enumerate() {
        let mut add = |target: Partition, c: RationalFunction| {
            let row = index[&target];
            m[row][col] = m[row][col].add(&c);
        };
        let mult = |nu: &Partition, v: u32| nu.parts().iter().filter(|&&x| x == v).count() as i64;
        let distinct: Vec<u32> = {
            let mut v = nu.parts().to_vec();
            v.dedup();
            v
        };
        // (alpha/2) sum_{a,b} ab p_{a+b} d_a d_b  (ordered pairs).
        for &a in &distinct {
            for &b in &distinct {
                let count = if a == b {
                    mult(nu, a) * (mult(nu, a) - 1)
                } else {
                    mult(nu, a) * mult(nu, b)
                };
                if count == 0 {
                    continue;
                }
                let mut parts = nu.parts().to_vec();
                remove_one(&mut parts, a);
                remove_one(&mut parts, b);
                parts.push(a + b);
                let c = alpha
                    .scale(&(&half * int(a as i64 * b as i64) * int(count)));
                add(Partition::new(parts), c);
            }
        }
        // (1/2) sum_{a+b=c} c p_a p_b d_c  (ordered (a,b), a,b >= 1).
        for &cpart in &distinct {
            let count = mult(nu, cpart);
            for a in 1..cpart {
                let b = cpart - a;
                let mut parts = nu.parts().to_vec();
                remove_one(&mut parts, cpart);
                parts.push(a);
                parts.push(b);
                add(
                    Partition::new(parts),
                    RationalFunction::constant(&half * int(cpart as i64) * int(count)),
                );
            }
        }
        // ((alpha-1)/2) sum_a a(a-1) p_a d_a.
        let mut diag = RationalFunction::zero();
        for &a in &distinct {
            let c = int(a as i64 * (a as i64 - 1)) * int(mult(nu, a)) * &half;
            diag = diag.add(
                &alpha
                    .sub(&RationalFunction::one())
                    .scale(&c),
            );
        }
        if !diag.is_zero() {
            add(nu.clone(), diag);
        }
    }
    m
}

fn remove_one(parts: &mut Vec<u32>, v: u32) {
    let pos = parts.iter().position(|&x| x == v).expect("part present");
    parts.remove(pos);
}

/// Eigenvalue of the Laplace-Beltrami operator on `J_lambda`.
fn eigenvalue(lambda: &Partition, alpha: &RationalFunction) -> RationalFunction {
    alpha
        .scale(&int(lambda.transpose().n_stat()))
        .sub(&RationalFunction::constant(int(lambda.n_stat())))
}

/// The integral Jack polynomial `J_lambda` at classical parameter `alpha`,
/// in power sums, with `[p_1^{|lambda|}] = 1`.
pub fn jack(lambda: &Partition, alpha: &RationalFunction) -> Result<SymFunc, SymfunError> {
    let d = lambda.size();
    if d == 0 {
        return Ok(SymFunc::one());
    }
    let basis = Partition::enumerate(d);
    let k = basis.len();
    // Transition R: p_mu = sum_nu R[mu][nu] m_nu, and its transpose inverse.
    let r = transition(d);
    let rt: Vec<Vec<BigRat>> = (0..k).map(|i| (0..k).map(|j| r[j][i].clone()).collect()).collect();
    let rt_inv = linalg::invert_rat(&rt).expect("power-sum/monomial transition is invertible");
    let lift = |m: &[Vec<BigRat>]| -> Vec<Vec<RationalFunction>> {
        m.iter()
            .map(|row| row.iter().map(|c| RationalFunction::constant(c.clone())).collect())
            .collect()
    };
    // D in the monomial basis: Dm = R^T Dp (R^T)^{-1}.
    let dp = lb_matrix_p(d, alpha);
    let dm = linalg::matmul_rf(&lift(&rt), &linalg::matmul_rf(&dp, &lift(&rt_inv)));
    // Triangular solve in a dominance-compatible order (n_stat ascending puts
    // dominance-larger partitions first).
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| basis[i].n_stat());
    let e_lam = eigenvalue(lambda, alpha);
    let lam_idx = basis.iter().position(|p| p == lambda).unwrap();
    let mut x = vec![RationalFunction::zero(); k];
    x[lam_idx] = RationalFunction::one();
    for &i in &order {
        if i == lam_idx {
            continue;
        }
        // Dominance triangularity: D m_tau only involves m_sigma with
        // sigma dominated by tau.
        let mut rhs = RationalFunction::zero();
        for &j in &order {
            if j != i && !x[j].is_zero() && !dm[i][j].is_zero() {
                debug_assert!(dominance_leq(&basis[i], &basis[j]), "LB operator not triangular");
                rhs = rhs.add(&dm[i][j].mul(&x[j]));
            }
        }
        if rhs.is_zero() {
            continue;
        }
        let gap = e_lam.sub(&dm[i][i]);
        if gap.is_zero() {
            return Err(SymfunError::EigenvalueCollision);
        }
        x[i] = rhs.div(&gap);
    }
    // Convert monomial coordinates to power sums: c_p = (R^T)^{-1} x.
    let mut cp = vec![RationalFunction::zero(); k];
    for i in 0..k {
        for j in 0..k {
            if !rt_inv[i][j].is_zero() && !x[j].is_zero() {
                cp[i] = cp[i].add(&x[j].scale(&rt_inv[i][j]));
            }
        }
    }
    // Normalize the p_1^d coefficient to 1.
    let ones = Partition::new(vec![1; d as usize]);
    let ones_idx = basis.iter().position(|p| *p == ones).unwrap();
    let norm = cp[ones_idx].clone();
    assert!(!norm.is_zero(), "vanishing p_1^d coefficient");
    let mut out = SymFunc::zero();
    for (i, c) in cp.into_iter().enumerate() {
        out.accumulate(basis[i].clone(), c.div(&norm));
    }
    Ok(out)
}

/// Jack polynomial in the surface parameter `theta` (see [`JackParam`]).
pub fn jack_in_powersums(lambda: &Partition, param: &JackParam) -> Result<SymFunc, SymfunError> {
    jack(lambda, &param.alpha())
}
