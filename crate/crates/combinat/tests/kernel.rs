//! Unit tests for partition statistics, weighted-partition enumeration,
//! the eigenvalue function `e(lambda, q)`, and core/quotient round trips.

use combinat::{e_lambda, enumerate_weighted, MultiPartition, Partition, WeightedPartition};
use exactalg::{int, ratfunc_eq, RationalFunction, SparsePoly, Var};
use num::Signed;

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

fn u_pow(k: i32) -> RationalFunction {
    RationalFunction::from_poly(SparsePoly::var_pow(Var::U, k))
}

#[test]
fn enumerate_weighted_small() {
    assert_eq!(enumerate_weighted(0, 3), vec![WeightedPartition::empty()]);
    assert_eq!(
        enumerate_weighted(1, 2),
        vec![
            WeightedPartition::new(vec![(1, 0)]),
            WeightedPartition::new(vec![(1, 1)]),
        ]
    );
    // The five-element Nakajima basis of grade 2 over a two-class surface.
    assert_eq!(enumerate_weighted(2, 2).len(), 5);
}

#[test]
fn enumerate_weighted_count_matches_colored_partition_count() {
    // Dynamic programming count of b-colored partitions of m: parts (size,
    // color) with unordered multiplicity.
    for b in 1usize..=4 {
        // ways[m] after processing all pair types (p, l) with p <= 10.
        let mut ways = vec![0u64; 11];
        ways[0] = 1;
        for part in 1..=10u32 {
            for _color in 0..b {
                for m in part as usize..=10 {
                    ways[m] += ways[m - part as usize];
                }
            }
        }
        for m in 0..=10u32 {
            assert_eq!(
                enumerate_weighted(m, b).len() as u64,
                ways[m as usize],
                "m={m} b={b}"
            );
        }
    }
}

#[test]
fn zfactor_examples() {
    // {(2,g),(1,g),(1,g)} -> 2*1*1*2! = 4
    assert_eq!(
        WeightedPartition::new(vec![(2, 0), (1, 0), (1, 0)]).zfactor(),
        int(4)
    );
    // distinct labels: no automorphism
    assert_eq!(WeightedPartition::new(vec![(1, 0), (1, 1)]).zfactor(), int(1));
    assert_eq!(WeightedPartition::new(vec![(3, 0)]).zfactor(), int(3));
    // plain-partition variant
    assert_eq!(p(&[2, 1, 1]).zfactor(), int(4));
    assert_eq!(p(&[3, 3, 2]).zfactor(), int(36));
}

#[test]
fn epsilon_examples() {
    assert_eq!(p(&[3, 1]).epsilon(), 3);
    assert_eq!(p(&[1, 1, 1, 1]).epsilon(), 0);
    for m in 1..8u32 {
        assert_eq!(p(&[m]).epsilon(), (m as i64) * (m as i64 - 1) / 2);
    }
}

#[test]
fn content_sum_examples() {
    let wl = RationalFunction::var(Var::T1);
    let wr = RationalFunction::var(Var::T2);
    assert!(Partition::empty().content_sum(&wl, &wr).is_zero());
    // One row of two boxes: the second box sits one step in the wL direction.
    assert!(ratfunc_eq(&p(&[2]).content_sum(&wl, &wr), &wl));
    assert!(ratfunc_eq(&p(&[2, 1]).content_sum(&wl, &wr), &wl.add(&wr)));
}

#[test]
fn content_sum_wl_coefficient_is_epsilon() {
    let wl = RationalFunction::var(Var::T1);
    let wr = RationalFunction::var(Var::T2);
    for m in 0..=6u32 {
        for lam in Partition::enumerate(m) {
            let c = lam.content_sum(&wl, &wr);
            let expect = wl
                .scale(&int(lam.epsilon()))
                .add(&wr.scale(&int(lam.transpose().epsilon())));
            assert!(ratfunc_eq(&c, &expect), "lambda = {lam}");
        }
    }
}

#[test]
fn e_lambda_empty_closed_form() {
    // (-q)^{-1/2} / (1 - (-q)^{-1}) with u^2 = -q.
    let expect = u_pow(-1).div(&RationalFunction::one().sub(&u_pow(-2)));
    assert!(ratfunc_eq(&e_lambda(&Partition::empty()), &expect));
}

#[test]
fn e_lambda_one_row_difference() {
    // e((m)) - e((m-1)) = (-q)^{m-1/2} - (-q)^{m-3/2}
    for m in 2..=8u32 {
        let d = e_lambda(&p(&[m])).sub(&e_lambda(&p(&[m - 1])));
        let expect = u_pow(2 * m as i32 - 1).sub(&u_pow(2 * m as i32 - 3));
        assert!(ratfunc_eq(&d, &expect));
    }
}

#[test]
fn e_lambda_vacuum_product_identity() {
    // e(empty) * (e((m-1)) - e((m))) = -(-q)^{m-1}
    for m in 2..=8u32 {
        let lhs = e_lambda(&Partition::empty())
            .mul(&e_lambda(&p(&[m - 1])).sub(&e_lambda(&p(&[m]))));
        let expect = u_pow(2 * (m as i32 - 1)).neg();
        assert!(ratfunc_eq(&lhs, &expect));
    }
}

#[test]
fn e_lambda_partial_sum_convergence() {
    // Truncations of sum_i (-q)^{lambda_i - i + 1/2} approach the closed form
    // numerically at u = 2 (|q| > 1).
    let lam = p(&[3, 1, 1]);
    let at = |v: Var| if v == Var::U { int(2) } else { int(1) };
    let exact = e_lambda(&lam).eval(&at).unwrap();
    let mut partial = exactalg::rat(0, 1);
    let mut last_err = None;
    for i in 1..=40i64 {
        let li = lam.parts().get(i as usize - 1).copied().unwrap_or(0) as i64;
        // u^{2(lambda_i - i) + 1} at u = 2
        let e = 2 * (li - i) + 1;
        let term = if e >= 0 {
            num::pow::pow(int(2), e as usize)
        } else {
            num::pow::pow(exactalg::rat(1, 2), (-e) as usize)
        };
        partial += term;
        let err = (&exact - &partial).abs();
        if let Some(prev) = last_err {
            assert!(err < prev, "partial sums must converge monotonically here");
        }
        last_err = Some(err);
    }
    assert!(last_err.unwrap() < exactalg::rat(1, 1_000_000_000));
}

#[test]
fn transpose_examples() {
    assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
    assert_eq!(Partition::empty().transpose(), Partition::empty());
    assert_eq!(p(&[4]).transpose(), p(&[1, 1, 1, 1]));
}

#[test]
fn core_quotient_empty() {
    let (core, quot) = Partition::empty().core_quotient(2);
    assert_eq!(core, Partition::empty());
    assert_eq!(quot, vec![Partition::empty(), Partition::empty()]);
}

#[test]
fn core_quotient_round_trip_exhaustive() {
    for m in 0..=8u32 {
        for lam in Partition::enumerate(m) {
            for r in 2..=4usize {
                let (core, quot) = lam.core_quotient(r);
                let qsize: u32 = quot.iter().map(|q| q.size()).sum();
                assert_eq!(lam.size(), r as u32 * qsize + core.size(), "lambda = {lam}, r = {r}");
                let back = Partition::from_core_quotient(&core, &quot);
                assert_eq!(back, lam, "r = {r}");
                // A core has trivial quotient.
                let (cc, cq) = core.core_quotient(r);
                assert_eq!(cc, core);
                assert!(cq.iter().all(Partition::is_empty));
            }
        }
    }
}

#[test]
fn partition_text_round_trip() {
    for s in ["", "3,1", "5,5,2,1,1"] {
        let lam: Partition = s.parse().unwrap();
        assert_eq!(lam.to_string(), s);
    }
    assert!("1,3".parse::<Partition>().is_err());
    assert!("0".parse::<Partition>().is_err());
}

#[test]
fn multipartition_text_round_trip() {
    let mp: MultiPartition = "[3,1|2|]".parse().unwrap();
    assert_eq!(mp.slots(), 3);
    assert_eq!(mp.size(), 6);
    assert_eq!(mp.to_string(), "[3,1|2|]");
    let vac: MultiPartition = "[|]".parse().unwrap();
    assert_eq!(vac.size(), 0);
    assert!("3,1|2".parse::<MultiPartition>().is_err());
}

#[test]
fn weighted_text_round_trip() {
    for s in ["", "2(w1).1(1)", "3(1).3(w2).1(w1).1(w1)"] {
        let w: WeightedPartition = s.parse().unwrap();
        assert_eq!(w.to_string(), s);
    }
    assert!("2(w0)".parse::<WeightedPartition>().is_err());
    assert!("2(x1)".parse::<WeightedPartition>().is_err());
}

#[test]
fn multipartition_enumeration_counts() {
    // sum over compositions of products of partition counts.
    let pc = |m: u32| Partition::enumerate(m).len();
    let direct: usize = (0..=3u32)
        .flat_map(|a| (0..=(3 - a)).map(move |b| pc(a) * pc(b) * pc(3 - a - b)))
        .sum();
    assert_eq!(MultiPartition::enumerate(3, 3).len(), direct);
}
