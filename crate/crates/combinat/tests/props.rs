//! Property tests: involutions, size bookkeeping, canonical-order
//! invariants, and dominance-order sanity.

use combinat::{dominance_leq, enumerate_weighted, Partition, WeightedPartition};
use proptest::prelude::*;

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=7, 0..7).prop_map(Partition::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn transpose_involution(lam in arb_partition()) {
        prop_assert_eq!(lam.transpose().transpose(), lam.clone());
        prop_assert_eq!(lam.transpose().size(), lam.size());
    }

    #[test]
    fn transpose_swaps_epsilon_and_n_stat(lam in arb_partition()) {
        prop_assert_eq!(lam.transpose().epsilon(), lam.n_stat());
    }

    #[test]
    fn core_quotient_size_bookkeeping(lam in arb_partition(), r in 2usize..=5) {
        let (core, quot) = lam.core_quotient(r);
        let qsize: u32 = quot.iter().map(|q| q.size()).sum();
        prop_assert_eq!(lam.size(), r as u32 * qsize + core.size());
        prop_assert_eq!(Partition::from_core_quotient(&core, &quot), lam);
    }

    #[test]
    fn weighted_canonical_order(pairs in prop::collection::vec((1u32..=5, 0usize..3), 0..6)) {
        let w = WeightedPartition::new(pairs);
        for win in w.pairs().windows(2) {
            prop_assert!(win[0].0 > win[1].0 || (win[0].0 == win[1].0 && win[0].1 <= win[1].1));
        }
        let back: WeightedPartition = w.to_string().parse().unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn dominance_reflexive_and_respects_transpose(a in arb_partition(), b in arb_partition()) {
        prop_assert!(dominance_leq(&a, &a));
        if a.size() == b.size() && dominance_leq(&a, &b) {
            // Transposition reverses dominance.
            prop_assert!(dominance_leq(&b.transpose(), &a.transpose()));
        }
    }
}

#[test]
fn enumeration_is_sorted_and_duplicate_free() {
    for m in 0..=6u32 {
        for b in 1..=3usize {
            let all = enumerate_weighted(m, b);
            for w in all.windows(2) {
                assert!(w[0] < w[1]);
            }
        }
        let ps = Partition::enumerate(m);
        for w in ps.windows(2) {
            assert!(w[0] > w[1], "descending lex");
        }
    }
}
