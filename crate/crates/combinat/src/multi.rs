//! Multipartitions: one partition per surface fixed point.

use crate::Partition;
use std::fmt;
use std::str::FromStr;

/// A sequence of partitions indexed by the fixed points `p_1..p_{n+1}` of the
/// surface; labels a torus-fixed subscheme of total length [`size`](Self::size).
///
/// Text form: components joined by `|` inside brackets, e.g. `[3,1|2|]` for
/// `((3,1), (2), ())`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(!components.is_empty());
        MultiPartition { components }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// Number of fixed-point slots (`n + 1`).
    pub fn slots(&self) -> usize {
        self.components.len()
    }

    /// Total size `sum_i |lambda_i|`.
    pub fn size(&self) -> u32 {
        self.components.iter().map(|p| p.size()).sum()
    }

    /// All multipartitions of total size `m` with the given number of slots,
    /// ordered lexicographically by component (each slot in the
    /// [`Partition::enumerate`] order).
    pub fn enumerate(m: u32, slots: usize) -> Vec<MultiPartition> {
        assert!(slots >= 1);
        fn go(m: u32, rest: usize, stack: &mut Vec<Partition>, out: &mut Vec<MultiPartition>) {
            if rest == 1 {
                for p in Partition::enumerate(m) {
                    stack.push(p);
                    out.push(MultiPartition { components: stack.clone() });
                    stack.pop();
                }
                return;
            }
            for k in 0..=m {
                for p in Partition::enumerate(k) {
                    stack.push(p);
                    go(m - k, rest - 1, stack, out);
                    stack.pop();
                }
            }
        }
        let mut out = vec![];
        go(m, slots, &mut vec![], &mut out);
        out
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for MultiPartition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| format!("bad multipartition {s:?}: expected [..|..]"))?;
        let components: Result<Vec<Partition>, _> =
            inner.split('|').map(Partition::from_str).collect();
        Ok(MultiPartition::new(components?))
    }
}
