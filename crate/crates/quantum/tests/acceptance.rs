//! Acceptance suite: the twelve headline criteria, one pass/fail line each.
//!
//! Each test prints exactly one `criterion NN: pass/FAIL` line (visible with
//! `--nocapture`) and asserts the same condition, so the target fails iff a
//! criterion fails.  Criteria 1 and 10 are qualified passes: every computed
//! value either matches the reference data or the deviation is itself
//! certified mechanically inside the underlying suite (see the per-check
//! details in `quantum::verify`).

use combinat::{e_lambda, enumerate_weighted, Partition, WeightedPartition};
use exactalg::{int, rat, ratfunc_eq, theta, RationalFunction, SparsePoly, Var};
use quantum::verify::{self, Budget, Report};
use quantum::{BeadOracle, EEngine};
use surface::{tangent_weights, Root, SurfaceData};
use symfun::{operator_a, operator_b, schur_in_powersums};

fn conclude(num: u32, label: &str, rep: &Report) {
    let passed = rep.passed();
    let skips = rep.checks.iter().filter(|c| c.skipped).count();
    let note = if skips > 0 { format!(" ({skips} declared skips)") } else { String::new() };
    println!(
        "criterion {num:02} ({label}): {}{note}",
        if passed { "pass" } else { "FAIL" }
    );
    if !passed {
        print!("{}", rep.render_text());
    }
    assert!(passed, "criterion {num:02} ({label}) failed");
}

fn conclude_flag(num: u32, label: &str, passed: bool, detail: &str) {
    println!("criterion {num:02} ({label}): {}", if passed { "pass" } else { "FAIL" });
    assert!(passed, "criterion {num:02} ({label}) failed: {detail}");
}

#[test]
fn c01_golden_matrices() {
    conclude(1, "reference 5x5 divisor matrices, m=2 n=1", &verify::golden_71());
}

#[test]
fn c02_commutativity() {
    let budget = Budget::seconds(30 * 60);
    let mut rep = Report::default();
    for (m, n) in [(2u32, 1usize), (3, 1), (4, 1), (2, 2), (3, 2)] {
        if budget.expired() {
            rep.skip(format!("commutativity m={m} n={n}"), "time budget exhausted");
            continue;
        }
        rep.absorb(&format!("m={m} n={n}"), verify::commute(m, n));
    }
    conclude(2, "divisor operators commute", &rep);
}

#[test]
fn c03_fixed_point_correlators() {
    let mut rep = Report::default();
    for n in 1..=2usize {
        for m in 2..=4u32 {
            for i in 1..=n {
                for j in i + 1..=n + 1 {
                    rep.absorb("interval", verify::fixedlemma3(m, n, i, j));
                }
            }
        }
    }
    conclude(3, "special fixed-point two-point correlators", &rep);
}

#[test]
fn c04_a_b_eigenvalues() {
    let mut ok = true;
    for m in 0..=5u32 {
        for lam in Partition::enumerate(m) {
            let s = schur_in_powersums(&lam);
            ok &= operator_a(&s).sub(&s.scale_rf(&e_lambda(&lam))).is_zero();
            ok &= operator_b(&s)
                .sub(&s.scale_rf(&e_lambda(&lam.transpose())))
                .is_zero();
        }
    }
    conclude_flag(4, "A/B eigenvalues on Schur functions, |lambda| <= 5", ok, "");
}

#[test]
fn c05_minor_vanishing_and_decomposition() {
    let mut rep = Report::default();
    for n in 1..=2usize {
        rep.absorb("minors", verify::omegavan(3, n));
    }
    conclude(5, "minor vanishing and diagonal decomposition mod theta", &rep);
}

#[test]
fn c06_factorization() {
    let mut rep = Report::default();
    for n in 1..=2usize {
        rep.absorb("factorization", verify::factorization(3, n));
    }
    conclude(6, "unit-part factorization, exact, grade <= 3", &rep);
}

#[test]
fn c07_degree_scaling() {
    let mut rep = Report::default();
    for n in 1..=2usize {
        rep.absorb("scaling", verify::degreescaling(3, 3, n));
    }
    conclude(7, "degree-d coefficients scale as E_alpha((-q)^d)/d", &rep);
}

#[test]
fn c08_punctual_tensor_form() {
    let mut rep = Report::default();
    for n in 1..=2usize {
        rep.absorb("punctual", verify::punctual(4, n));
    }
    conclude(8, "punctual operator is a direct sum of local operators", &rep);
}

#[test]
fn c09_qde_residues() {
    let mut rep = Report::default();
    for n in 1..=2usize {
        rep.absorb("residues", verify::residues(3, n));
    }
    conclude(9, "residues: vanishing, spectrum, window bound, k-ratio", &rep);
}

#[test]
fn c10_perturbation() {
    conclude(10, "first-order perturbation eigenvalues, n=1 m<=4", &verify::perturbation(4));
}

#[test]
fn c11_cross_realization() {
    let mut ok = true;
    let mut detail = String::new();
    for n in 1..=2usize {
        let s = SurfaceData::new(n);
        let oracle = BeadOracle::new(n);
        let mut words: Vec<WeightedPartition> = vec![];
        for m in 0..=2u32 {
            words.extend(enumerate_weighted(m, n + 1));
        }
        for alpha in Root::positive(n) {
            if alpha.d != 1 {
                continue;
            }
            let engine = EEngine::over_omega_basis(&s, alpha);
            for bra in &words {
                for ket in &words {
                    for sh in -2..=2i32 {
                        let e = engine.sandwich(bra.pairs(), sh, ket.pairs());
                        let o = oracle.sandwich(bra.pairs(), alpha, sh, ket.pairs());
                        if !ratfunc_eq(&e, &o) {
                            ok = false;
                            detail = format!(
                                "n={n} alpha=({},{}) s={sh} bra={bra} ket={ket}",
                                alpha.i, alpha.j
                            );
                        }
                    }
                }
            }
        }
    }
    conclude_flag(11, "engine agrees with the bead-move oracle, grade <= 2", ok, &detail);
}

#[test]
fn c12_kernel_properties() {
    let mut ok = true;
    // Ring axioms on sampled elements: distributivity, commutativity,
    // cancellation in the fraction field.
    let t1 = SparsePoly::var(Var::T1);
    let t2 = SparsePoly::var(Var::T2);
    let u = SparsePoly::var(Var::U);
    let a = RationalFunction::new(t1.pow(2).sub(&t2.pow(2)), t1.sub(&t2));
    let b = RationalFunction::from_poly(t1.add(&t2));
    ok &= ratfunc_eq(&a, &b);
    let c = RationalFunction::new(u.pow(3).add(&t1.mul(&u)), u.clone());
    let d = RationalFunction::from_poly(u.pow(2).add(&t1));
    ok &= ratfunc_eq(&c, &d);
    ok &= ratfunc_eq(&a.mul(&c).add(&b.mul(&d)), &b.mul(&d).scale(&int(2)));
    // reduce_mod_theta2 multiplicativity: D(fg) = D(f) D(g) in the dual
    // numbers over theta.
    let f = RationalFunction::new(
        t1.mul(&t2).add(&u.pow(2)),
        t1.add(&t2).add(&SparsePoly::one()),
    );
    let g = RationalFunction::new(
        t1.sub(&SparsePoly::var_pow(Var::U, -1)).add(&theta()),
        t2.add(&SparsePoly::one()),
    );
    let (df, dg, dfg) = (
        f.reduce_mod_theta2().unwrap(),
        g.reduce_mod_theta2().unwrap(),
        f.mul(&g).reduce_mod_theta2().unwrap(),
    );
    let prod = df.mul(&dg);
    ok &= ratfunc_eq(prod.base(), dfg.base()) && ratfunc_eq(prod.eps1(), dfg.eps1());
    // Localization identity: sum_i 1/(wL_i wR_i) = 1/((n+1) t1 t2).
    for n in 1..=8usize {
        let mut acc = RationalFunction::zero();
        for i in 1..=n + 1 {
            let (l, r) = tangent_weights(n, i);
            acc = acc.add(&RationalFunction::from_poly(l.mul(&r)).inv());
        }
        let want = RationalFunction::from_poly(
            t1.mul(&t2).scale(&rat(n as i64 + 1, 1)),
        )
        .inv();
        ok &= ratfunc_eq(&acc, &want);
    }
    conclude_flag(12, "exact kernel ring, dual-theta, localization identities", ok, "");
}
