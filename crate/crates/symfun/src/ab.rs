//! The grade-preserving operators `A(q)` and `B(q)` on symmetric functions.
//!
//! `A(q) p_mu = sum_nu p_nu sum_{rho subset mu cap nu} (1/z(nu\rho)) *
//! (1/sigma) * f_{mu\rho}(q) f_{nu\rho}(q)` with
//! `f_lambda(q) = prod_i (u^{lambda_i} - u^{-lambda_i})` (`u^2 = -q`) and
//! prefactor `1/sigma = u/(u^2-1) = 1/(u - u^{-1})`. The prefactor sign is
//! fixed by the degree-0 case `A(q) . 1 = e(empty,q) . 1`; the opposite sign
//! fails it. `B(q) = omega . A(q) . omega`.

use crate::symfunc::SymFunc;
use combinat::Partition;
use exactalg::{RationalFunction, SparsePoly, Var};

fn binom(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let mut c = 1i64;
    for i in 0..k {
        c = c * (n - i) as i64 / (i + 1) as i64;
    }
    c
}

fn f_factor(parts: &[u32]) -> SparsePoly {
    let mut f = SparsePoly::one();
    for &a in parts {
        let a = a as i32;
        f = f.mul(&SparsePoly::var_pow(Var::U, a).sub(&SparsePoly::var_pow(Var::U, -a)));
    }
    f
}

/// Multiset difference `mu \ rho` given multiplicity choices per value.
fn diff(mu: &Partition, rho: &[(u32, usize)]) -> Vec<u32> {
    let mut out = vec![];
    let mut remove: Vec<(u32, usize)> = rho.to_vec();
    for &p in mu.parts() {
        if let Some(e) = remove.iter_mut().find(|(v, m)| *v == p && *m > 0) {
            e.1 -= 1;
        } else {
            out.push(p);
        }
    }
    out
}

/// Apply `A(q)` to a symmetric function (homogeneous pieces are preserved).
pub fn operator_a(f: &SymFunc) -> SymFunc {
    // 1/sigma = u/(u^2 - 1).
    let pref = RationalFunction::new(
        SparsePoly::var(Var::U),
        SparsePoly::var_pow(Var::U, 2).sub(&SparsePoly::one()),
    );
    let mut out = SymFunc::zero();
    for (mu, c) in f.terms() {
        for nu in Partition::enumerate(mu.size()) {
            // Distinct values of the multiset intersection with multiplicities.
            let inter: Vec<(u32, usize)> = {
                let mut vals: Vec<u32> = mu.parts().to_vec();
                vals.dedup();
                vals.into_iter()
                    .filter_map(|v| {
                        let a = mu.parts().iter().filter(|&&x| x == v).count();
                        let b = nu.parts().iter().filter(|&&x| x == v).count();
                        let m = a.min(b);
                        (m > 0).then_some((v, m))
                    })
                    .collect()
            };
            // Sum over sub-multisets rho of the intersection.
            let mut coeff = RationalFunction::zero();
            let mut choice = vec![0usize; inter.len()];
            loop {
                let rho: Vec<(u32, usize)> =
                    inter.iter().zip(&choice).map(|(&(v, _), &m)| (v, m)).collect();
                // Multiplicity of the sub-multiset rho inside mu: the sum
                // counts selections of parts of mu, not abstract multisets
                // (fixed by the Schur-eigenvalue oracle).
                let mut ways = 1i64;
                for &(v, r) in &rho {
                    let a = mu.parts().iter().filter(|&&x| x == v).count();
                    ways *= binom(a, r);
                }
                let nu_rest = Partition::new(diff(&nu, &rho));
                let mu_rest = diff(mu, &rho);
                let term = RationalFunction::from_poly(
                    f_factor(&mu_rest).mul(&f_factor(nu_rest.parts())),
                )
                .scale(&(nu_rest.zfactor().recip() * exactalg::int(ways)));
                coeff = coeff.add(&term);
                // Advance the multiplicity choice vector.
                let mut pos = 0;
                loop {
                    if pos == inter.len() {
                        break;
                    }
                    choice[pos] += 1;
                    if choice[pos] <= inter[pos].1 {
                        break;
                    }
                    choice[pos] = 0;
                    pos += 1;
                }
                if pos == inter.len() {
                    break;
                }
            }
            let total = coeff.mul(&pref).mul(c);
            out.accumulate(nu, total);
        }
    }
    out
}

/// `B(q) = omega . A(q) . omega`.
pub fn operator_b(f: &SymFunc) -> SymFunc {
    operator_a(&f.omega()).omega()
}
