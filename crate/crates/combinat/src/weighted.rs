//! Cohomology-weighted partitions: Nakajima basis labels.

use exactalg::{int, BigRat};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// A partition whose parts carry cohomology labels, indexing a Nakajima
/// basis element of total degree [`size`](Self::size).
///
/// Labels are indices into a cohomology basis: `0` is the unit class
/// (written `1`), `i > 0` is the class `omega_i` (written `w<i>`). Pairs are
/// kept in canonical order: part descending, then label ascending.
///
/// Text form: `part(label)` atoms joined by `.`, e.g. `2(w1).1(1)`; the
/// empty element is the empty string.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedPartition {
    pairs: Vec<(u32, usize)>,
}

impl WeightedPartition {
    pub fn new(mut pairs: Vec<(u32, usize)>) -> Self {
        assert!(pairs.iter().all(|&(p, _)| p > 0), "zero part");
        pairs.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        WeightedPartition { pairs }
    }

    pub fn empty() -> Self {
        WeightedPartition { pairs: vec![] }
    }

    /// `(part, label)` pairs in canonical order.
    pub fn pairs(&self) -> &[(u32, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Total size `sum` of the parts.
    pub fn size(&self) -> u32 {
        self.pairs.iter().map(|&(p, _)| p).sum()
    }

    /// `z(mu) = (prod of parts) * |Aut|`, where `Aut` permutes identical
    /// `(part, label)` pairs.
    pub fn zfactor(&self) -> BigRat {
        let mut z = int(1);
        let mut run = 0i64;
        for (i, pr) in self.pairs.iter().enumerate() {
            run = if i > 0 && self.pairs[i - 1] == *pr { run + 1 } else { 1 };
            z *= int(pr.0 as i64) * int(run);
        }
        z
    }
}

/// Lexicographic on (part sequence, label sequence); gives the deterministic
/// enumeration order of [`enumerate_weighted`].
impl Ord for WeightedPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        let parts = |w: &WeightedPartition| w.pairs.iter().map(|&(p, _)| p).collect::<Vec<_>>();
        let labels = |w: &WeightedPartition| w.pairs.iter().map(|&(_, l)| l).collect::<Vec<_>>();
        parts(self)
            .cmp(&parts(other))
            .then_with(|| labels(self).cmp(&labels(other)))
    }
}

impl PartialOrd for WeightedPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All cohomology-weighted partitions of total size `m` with labels in
/// `0..basis_size`, sorted in the canonical (lex) order.
pub fn enumerate_weighted(m: u32, basis_size: usize) -> Vec<WeightedPartition> {
    assert!(basis_size >= 1);
    // Choose pairs in weakly decreasing canonical order to avoid duplicates.
    fn go(
        rem: u32,
        max_pair: (u32, usize),
        basis_size: usize,
        stack: &mut Vec<(u32, usize)>,
        out: &mut Vec<WeightedPartition>,
    ) {
        if rem == 0 {
            out.push(WeightedPartition { pairs: stack.clone() });
            return;
        }
        for p in (1..=rem.min(max_pair.0)).rev() {
            let lmin = if p == max_pair.0 { max_pair.1 } else { 0 };
            for l in lmin..basis_size {
                stack.push((p, l));
                go(rem - p, (p, l), basis_size, stack, out);
                stack.pop();
            }
        }
    }
    let mut out = vec![];
    go(m, (m, 0), basis_size, &mut vec![], &mut out);
    out.sort();
    out
}

fn label_str(l: usize) -> String {
    if l == 0 {
        "1".to_string()
    } else {
        format!("w{l}")
    }
}

impl fmt::Display for WeightedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(p, l)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{p}({})", label_str(l))?;
        }
        Ok(())
    }
}

impl FromStr for WeightedPartition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(WeightedPartition::empty());
        }
        let mut pairs = vec![];
        for atom in s.split('.') {
            let atom = atom.trim();
            let (part, rest) = atom
                .split_once('(')
                .ok_or_else(|| format!("bad weighted partition atom {atom:?}"))?;
            let label = rest
                .strip_suffix(')')
                .ok_or_else(|| format!("bad weighted partition atom {atom:?}"))?;
            let part: u32 = part
                .parse()
                .map_err(|e| format!("bad part in {atom:?}: {e}"))?;
            if part == 0 {
                return Err(format!("bad part in {atom:?}: zero"));
            }
            let label = if label == "1" {
                0
            } else if let Some(i) = label.strip_prefix('w') {
                let i: usize = i.parse().map_err(|e| format!("bad label in {atom:?}: {e}"))?;
                if i == 0 {
                    return Err(format!("bad label in {atom:?}: w0"));
                }
                i
            } else {
                return Err(format!("bad label in {atom:?}: expected 1 or w<i>"));
            };
            pairs.push((part, label));
        }
        Ok(WeightedPartition::new(pairs))
    }
}
