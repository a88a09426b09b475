//! Variable symbols and interned ordered variable sets.

use once_cell::sync::Lazy;
use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, Mutex};

/// A polynomial variable. The derived ordering (`T1 < T2 < U < S(1) < S(2) <
/// ...`) is the global variable order used for the graded-lexicographic term
/// order and for canonical serialization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    T1,
    T2,
    U,
    /// Degree-tracking variable `s_i`, `i >= 1`.
    S(u8),
}

impl Var {
    /// Laurent (negative) exponents are permitted only for `u`.
    pub fn laurent_allowed(self) -> bool {
        matches!(self, Var::U)
    }

    /// Parse the canonical names `t1`, `t2`, `u`, `s<i>`.
    pub fn parse(name: &str) -> Option<Var> {
        match name {
            "t1" => Some(Var::T1),
            "t2" => Some(Var::T2),
            "u" => Some(Var::U),
            _ => name
                .strip_prefix('s')
                .and_then(|i| i.parse::<u8>().ok())
                .filter(|&i| i >= 1)
                .map(Var::S),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::T1 => write!(f, "t1"),
            Var::T2 => write!(f, "t2"),
            Var::U => write!(f, "u"),
            Var::S(i) => write!(f, "s{i}"),
        }
    }
}

/// An ordered, interned list of variables. Interning makes the common case of
/// unifying two polynomials over the same variables a pointer comparison.
pub type VarSet = Arc<Vec<Var>>;

static INTERN: Lazy<Mutex<HashSet<VarSet>>> = Lazy::new(|| Mutex::new(HashSet::new()));

/// Intern a sorted, deduplicated variable list.
pub fn intern(vars: Vec<Var>) -> VarSet {
    debug_assert!(vars.windows(2).all(|w| w[0] < w[1]), "vars must be strictly sorted");
    let mut table = INTERN.lock().unwrap();
    if let Some(existing) = table.get(&vars) {
        return existing.clone();
    }
    let arc: VarSet = Arc::new(vars);
    table.insert(arc.clone());
    arc
}

/// Intern the sorted union of two variable sets.
pub fn union(a: &VarSet, b: &VarSet) -> VarSet {
    if Arc::ptr_eq(a, b) || a == b {
        return a.clone();
    }
    let mut merged: Vec<Var> = a.iter().chain(b.iter()).copied().collect();
    merged.sort_unstable();
    merged.dedup();
    intern(merged)
}
