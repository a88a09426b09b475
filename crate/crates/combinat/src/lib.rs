//! Partition combinatorics.
//!
//! Integer partitions, multipartitions (one partition per surface fixed
//! point), and cohomology-weighted partitions (Nakajima basis labels),
//! together with the statistics used by the operator engine: automorphism
//! factors, the `epsilon` statistic, weighted content sums, the eigenvalue
//! function `e(lambda, q)`, and `r`-core / `r`-quotient decompositions via
//! bead (Maya diagram) positions.
//!
//! All values are immutable; enumeration orders are deterministic.

mod multi;
mod partition;
mod weighted;

pub use multi::MultiPartition;
pub use partition::{dominance_leq, e_lambda, Partition};
pub use weighted::{enumerate_weighted, WeightedPartition};
