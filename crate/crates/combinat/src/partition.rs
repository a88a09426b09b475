//! Integer partitions and their statistics.

use exactalg::{int, BigRat, RationalFunction, SparsePoly, Var};
use std::fmt;
use std::str::FromStr;

/// An integer partition: weakly decreasing positive parts.
///
/// The derived `Ord` is lexicographic on the part sequence, so partitions of
/// a fixed size sort in ascending lex order, e.g. `(1,1) < (2)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Build a partition from arbitrary part values: zeros are dropped and
    /// the rest sorted into weakly decreasing order.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// All partitions of `m`, in descending lex order: `(m)` first, `(1^m)` last.
    pub fn enumerate(m: u32) -> Vec<Partition> {
        fn go(rem: u32, max: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: stack.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                stack.push(p);
                go(rem - p, p, stack, out);
                stack.pop();
            }
        }
        let mut out = vec![];
        go(m, m, &mut vec![], &mut out);
        out
    }

    /// The conjugate partition (reflect the diagram across its diagonal).
    pub fn transpose(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0) as usize;
        let mut t = vec![0u32; cols];
        for &p in &self.parts {
            for c in t.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: t }
    }

    /// Boxes of the diagram as `(row, column)`, both 1-based.
    pub fn boxes(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i as u32 + 1, j)))
    }

    /// `epsilon(lambda) = sum_i C(lambda_i, 2)`.
    pub fn epsilon(&self) -> i64 {
        self.parts.iter().map(|&p| (p as i64) * (p as i64 - 1) / 2).sum()
    }

    /// `n(lambda) = sum_i (i-1) lambda_i`; equals `epsilon` of the transpose.
    pub fn n_stat(&self) -> i64 {
        self.parts.iter().enumerate().map(|(i, &p)| i as i64 * p as i64).sum()
    }

    /// `z(lambda)`: product of the parts times the factorial of each part
    /// multiplicity. The order of the centralizer of a permutation of cycle
    /// type `lambda` in `S_{|lambda|}`.
    pub fn zfactor(&self) -> BigRat {
        let mut z = int(1);
        let mut run = 0i64;
        for (i, &p) in self.parts.iter().enumerate() {
            run = if i > 0 && self.parts[i - 1] == p { run + 1 } else { 1 };
            z *= int(p as i64) * int(run);
        }
        z
    }

    /// Weighted content sum `sum_{(i,j) in lambda} (j-1) wL + (i-1) wR` over
    /// boxes `(row i, column j)`.
    ///
    /// The pairing of the column index with `wL` is fixed by requiring the
    /// coefficient of `wL` to equal `epsilon(lambda)`.
    pub fn content_sum(&self, wl: &RationalFunction, wr: &RationalFunction) -> RationalFunction {
        let mut cl = 0i64;
        let mut cr = 0i64;
        for (i, j) in self.boxes() {
            cl += j as i64 - 1;
            cr += i as i64 - 1;
        }
        wl.scale(&int(cl)).add(&wr.scale(&int(cr)))
    }

    /// `true` iff `self` is dominated by `other` (partial sums of `self` are
    /// bounded by those of `other`). Meaningful for equal sizes.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        dominance_leq(self, other)
    }

    // -------------------------------------------------------- cores and beads

    /// Bead positions (beta numbers) `lambda_i + t - i`, `i = 1..=t`, for a
    /// display with `t` beads.
    fn beta(&self, t: usize) -> Vec<u64> {
        assert!(t >= self.len());
        (1..=t)
            .map(|i| self.parts.get(i - 1).copied().unwrap_or(0) as u64 + (t - i) as u64)
            .collect()
    }

    fn from_beta(mut beta: Vec<u64>) -> Partition {
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let t = beta.len();
        let parts = beta
            .iter()
            .enumerate()
            .map(|(k, &b)| (b - (t - 1 - k) as u64) as u32)
            .collect();
        Partition::new(parts)
    }

    /// The `r`-core and `r`-quotient of the partition.
    ///
    /// Beads are distributed onto `r` runners by residue mod `r`; the
    /// quotient component `j` reads off the bead pattern on runner `j`, and
    /// the core is obtained by sliding every bead down its runner. The bead
    /// count is always a multiple of `r`, which pins the runner labelling.
    pub fn core_quotient(&self, r: usize) -> (Partition, Vec<Partition>) {
        assert!(r >= 2);
        let t = r * (self.len() / r + 1);
        let mut runners: Vec<Vec<u64>> = vec![vec![]; r];
        for &b in &self.beta(t) {
            runners[(b % r as u64) as usize].push(b / r as u64);
        }
        let mut quotient = Vec::with_capacity(r);
        let mut core_beta = vec![];
        for (j, runner) in runners.iter_mut().enumerate() {
            runner.sort_unstable();
            let parts = runner
                .iter()
                .enumerate()
                .map(|(a, &v)| (v - a as u64) as u32)
                .collect();
            quotient.push(Partition::new(parts));
            for a in 0..runner.len() {
                core_beta.push((r * a + j) as u64);
            }
        }
        (Partition::from_beta(core_beta), quotient)
    }

    /// Inverse of [`core_quotient`](Self::core_quotient): rebuild the
    /// partition with the given `r`-core and `r`-quotient (`r` = number of
    /// quotient components).
    pub fn from_core_quotient(core: &Partition, quotient: &[Partition]) -> Partition {
        let r = quotient.len();
        assert!(r >= 2);
        let total: u32 = quotient.iter().map(|q| q.size()).sum();
        // Enough beads that every runner can hold its quotient component.
        let t = r * (core.len() + r * total as usize + 1);
        let mut counts = vec![0usize; r];
        for &b in &core.beta(t) {
            counts[(b % r as u64) as usize] += 1;
        }
        let mut beta = vec![];
        for (j, q) in quotient.iter().enumerate() {
            let c = counts[j];
            debug_assert!(c >= q.len());
            for a in 0..c {
                // Ascending bead index a carries the (c-a)-th largest part.
                let part = q.parts.get(c - 1 - a).copied().unwrap_or(0) as u64;
                beta.push((a as u64 + part) * r as u64 + j as u64);
            }
        }
        Partition::from_beta(beta)
    }
}

/// Dominance order: `a` is dominated by `b`.
pub fn dominance_leq(a: &Partition, b: &Partition) -> bool {
    let mut sa = 0u64;
    let mut sb = 0u64;
    for i in 0..a.len().max(b.len()) {
        sa += a.parts().get(i).copied().unwrap_or(0) as u64;
        sb += b.parts().get(i).copied().unwrap_or(0) as u64;
        if sa > sb {
            return false;
        }
    }
    sa == sb
}

/// The eigenvalue function `e(lambda, q) = sum_{i>=1} (-q)^{lambda_i - i + 1/2}`,
/// summed in closed form with `u^2 = -q`:
/// `sum_{i=1}^{l} u^{2(lambda_i - i) + 1} + u^{1 - 2l} / (u^2 - 1)`.
pub fn e_lambda(lambda: &Partition) -> RationalFunction {
    let l = lambda.len() as i32;
    let mut head = SparsePoly::zero();
    for (i, &p) in lambda.parts().iter().enumerate() {
        head = head.add(&SparsePoly::var_pow(Var::U, 2 * (p as i32 - (i as i32 + 1)) + 1));
    }
    let tail = RationalFunction::new(
        SparsePoly::var_pow(Var::U, 1 - 2 * l),
        SparsePoly::var_pow(Var::U, 2).sub(&SparsePoly::one()),
    );
    RationalFunction::from_poly(head).add(&tail)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, _> = s.split(',').map(|x| x.trim().parse::<u32>()).collect();
        let parts = parts.map_err(|e| format!("bad partition {s:?}: {e}"))?;
        if parts.iter().any(|&p| p == 0) {
            return Err(format!("bad partition {s:?}: zero part"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(format!("bad partition {s:?}: parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }
}
