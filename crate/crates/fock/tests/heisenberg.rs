//! Heisenberg-algebra calculus tests: commutators, vacuum behavior, the
//! graded inner product and its adjoint rule, Gram matrices, and label-basis
//! changes.

use combinat::{enumerate_weighted, Partition, WeightedPartition};
use exactalg::{int, rat, ratfunc_eq, RationalFunction, SparsePoly, Var};
use fock::{FockSpace, FockVector};
use surface::SurfaceData;

fn c(k: i64) -> RationalFunction {
    RationalFunction::constant(int(k))
}

fn space(n: usize) -> FockSpace {
    FockSpace::over_surface(&SurfaceData::new(n))
}

/// Label coordinates of `E_1` over `(1, omega_1..omega_n)`.
fn e1_coords(s: &SurfaceData) -> Vec<RationalFunction> {
    s.e_class(1).coords().to_vec()
}

#[test]
fn annihilator_kills_vacuum() {
    let f = space(1);
    let v = f.apply_p(1, &f.label(0), &FockVector::vacuum());
    assert!(v.is_zero());
}

#[test]
fn single_commutator_on_vacuum() {
    // p_2(g_a) p_{-2}(g_b) v = -2 <g_a, g_b> v
    for n in 0..=2usize {
        let f = space(n);
        for a in 0..f.basis_size() {
            for b in 0..f.basis_size() {
                let v = f.apply_p(-2, &f.label(b), &FockVector::vacuum());
                let v = f.apply_p(2, &f.label(a), &v);
                let expect = f.label_pairing(a, b).scale(&int(-2));
                assert!(ratfunc_eq(&v.coeff(&WeightedPartition::empty()), &expect));
            }
        }
    }
}

#[test]
fn annihilation_by_e1_on_mixed_monomial() {
    // p_1(E_1) on the monomial {(1,w1),(1,1)}: <E_1, w1> = 1, <E_1, 1> = 0,
    // each occurrence contributes a factor -1.
    let s = SurfaceData::new(1);
    let f = FockSpace::over_surface(&s);
    let v = FockVector::monomial(WeightedPartition::new(vec![(1, 1), (1, 0)]));
    let out = f.apply_p(1, &e1_coords(&s), &v);
    assert!(ratfunc_eq(
        &out.coeff(&WeightedPartition::new(vec![(1, 0)])),
        &c(-1)
    ));
    assert!(out.coeff(&WeightedPartition::new(vec![(1, 1)])).is_zero());
}

#[test]
fn commutator_law_on_low_grades() {
    // [p_k(g_a), p_l(g_b)] = -k delta_{k+l} <g_a, g_b> as operators on all
    // monomials of grade <= 4.
    let f = space(1);
    for m in 0..=4u32 {
        for mu in enumerate_weighted(m, f.basis_size()) {
            let v = FockVector::monomial(mu);
            for k in [-2i32, -1, 1, 2] {
                for l in [-2i32, -1, 1, 2] {
                    for a in 0..2 {
                        for b in 0..2 {
                            let kl = f.apply_p(k, &f.label(a), &f.apply_p(l, &f.label(b), &v));
                            let lk = f.apply_p(l, &f.label(b), &f.apply_p(k, &f.label(a), &v));
                            let bracket = kl.sub(&lk);
                            let expect = if k + l == 0 {
                                v.scale_rf(&f.label_pairing(a, b).scale(&int(-(k as i64))))
                            } else {
                                FockVector::zero(v.grade())
                            };
                            let diff = bracket.sub(&expect);
                            assert!(
                                diff.terms().all(|(_, x)| x.is_zero()),
                                "k={k} l={l} a={a} b={b}"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn vacuum_norm_and_mode_pairing() {
    let f = space(1);
    assert!(ratfunc_eq(
        &f.inner_product(&FockVector::vacuum(), &FockVector::vacuum()),
        &c(1)
    ));
    // <p_{-k}(g_a) v, p_{-k}(g_b) v> = (-1)^{k+1} k <g_a, g_b>
    for k in 1..=4i32 {
        for a in 0..2 {
            for b in 0..2 {
                let va = f.apply_p(-k, &f.label(a), &FockVector::vacuum());
                let vb = f.apply_p(-k, &f.label(b), &FockVector::vacuum());
                let sign = if k % 2 == 0 { -1 } else { 1 };
                let expect = f.label_pairing(a, b).scale(&int(sign * k as i64));
                assert!(ratfunc_eq(&f.inner_product(&va, &vb), &expect));
            }
        }
    }
}

#[test]
fn adjoint_rule() {
    // <p_k(g) x, y> = (-1)^k <x, p_{-k}(g) y> for mixed-mode vectors.
    let s = SurfaceData::new(1);
    let f = FockSpace::over_surface(&s);
    let x = FockVector::monomial(WeightedPartition::new(vec![(2, 1), (1, 0)]));
    for k in [1i32, 2, -1] {
        let grade_y = (x.grade() as i32 - k) as u32;
        for nu in enumerate_weighted(grade_y, 2) {
            let y = FockVector::monomial(nu);
            let lhs = f.inner_product(&f.apply_p(k, &e1_coords(&s), &x), &y);
            let rhs = f.inner_product(&x, &f.apply_p(-k, &e1_coords(&s), &y));
            let sign = if k % 2 == 0 { 1 } else { -1 };
            assert!(ratfunc_eq(&lhs, &rhs.scale(&int(sign))), "k={k}");
        }
    }
}

#[test]
fn gram_matrix_examples() {
    let f = space(1);
    let g0 = f.gram_matrix(0);
    assert!(ratfunc_eq(&g0[0][0], &c(1)));
    // Grade 1: the Gram matrix is the label pairing itself.
    let g1 = f.gram_matrix(1);
    for a in 0..2 {
        for b in 0..2 {
            assert!(ratfunc_eq(&g1[a][b], f.label_pairing(a, b)));
        }
    }
    // Block structure: entries vanish unless the underlying partitions agree.
    let basis = enumerate_weighted(3, 2);
    let g3 = f.gram_matrix(3);
    for (i, mu) in basis.iter().enumerate() {
        for (j, nu) in basis.iter().enumerate() {
            let shape_mu: Vec<u32> = mu.pairs().iter().map(|p| p.0).collect();
            let shape_nu: Vec<u32> = nu.pairs().iter().map(|p| p.0).collect();
            if shape_mu != shape_nu {
                assert!(g3[i][j].is_zero());
            }
        }
    }
    // Symmetry.
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            assert!(ratfunc_eq(&g3[i][j], &g3[j][i]));
        }
    }
}

#[test]
fn gram_matrix_nondegenerate() {
    // Invert blockwise (blocks indexed by the underlying partition shape).
    for n in 0..=2usize {
        let f = space(n);
        for m in 0..=4u32 {
            let basis = enumerate_weighted(m, f.basis_size());
            let gram = f.gram_matrix(m);
            for shape in Partition::enumerate(m) {
                let idx: Vec<usize> = basis
                    .iter()
                    .enumerate()
                    .filter(|(_, mu)| {
                        mu.pairs().iter().map(|p| p.0).collect::<Vec<_>>() == shape.parts()
                    })
                    .map(|(i, _)| i)
                    .collect();
                let block: Vec<Vec<RationalFunction>> = idx
                    .iter()
                    .map(|&i| idx.iter().map(|&j| gram[i][j].clone()).collect())
                    .collect();
                assert!(
                    exactalg::linalg::invert_rf(&block).is_some(),
                    "singular Gram block n={n} m={m} shape={shape}"
                );
            }
        }
    }
}

#[test]
fn nakajima_duality_up_to_sign() {
    // The normalized Nakajima basis over labels g_a pairs against the
    // normalized Nakajima basis over the dual classes g^a diagonally:
    // <mu (labels), nu (dual labels)> = delta_{mu nu} (-1)^{m - l(mu)} / z(mu).
    for n in 1..=2usize {
        let f = space(n);
        let b = f.basis_size();
        let pairing: Vec<Vec<RationalFunction>> = (0..b)
            .map(|i| (0..b).map(|j| f.label_pairing(i, j).clone()).collect())
            .collect();
        let dual = exactalg::linalg::invert_rf(&pairing).unwrap();
        for m in 0..=3u32 {
            let basis = enumerate_weighted(m, b);
            for mu in &basis {
                let vmu = f.nakajima_vector(mu);
                for nu in &basis {
                    // nu with labels sent through the dual-basis expansion.
                    let vnu = FockSpace::relabel_basis(&f.nakajima_vector(nu), &dual);
                    let got = f.inner_product(&vmu, &vnu);
                    if mu == nu {
                        let sign = if (m as usize - mu.len()) % 2 == 0 { 1 } else { -1 };
                        let expect =
                            RationalFunction::constant(mu.zfactor().recip() * int(sign));
                        assert!(ratfunc_eq(&got, &expect), "mu={mu}");
                    } else {
                        assert!(got.is_zero(), "mu={mu} nu={nu}");
                    }
                }
            }
        }
    }
}

#[test]
fn relabel_identity_and_fixed_point_round_trip() {
    // Identity transform.
    let f = space(1);
    let v = f.nakajima_vector(&WeightedPartition::new(vec![(2, 1), (1, 0)]));
    let id = vec![f.label(0), f.label(1)];
    let diff = FockSpace::relabel_basis(&v, &id).sub(&v);
    assert!(diff.terms().all(|(_, x)| x.is_zero()));

    // n = 0: {(1, [p_1])} -> t1 t2 {(1, 1)}.
    let s0 = SurfaceData::new(0);
    let to_std = vec![s0.fixed_point_class(1).coords().to_vec()];
    let w = FockSpace::relabel_basis(&FockVector::monomial(WeightedPartition::new(vec![(1, 0)])), &to_std);
    let t1t2 = RationalFunction::from_poly(SparsePoly::var(Var::T1).mul(&SparsePoly::var(Var::T2)));
    assert!(ratfunc_eq(&w.coeff(&WeightedPartition::new(vec![(1, 0)])), &t1t2));

    // Round trip {1,omega} -> fixed points -> {1,omega} for m <= 3, n <= 2.
    for n in 0..=2usize {
        let s = SurfaceData::new(n);
        let f = FockSpace::over_surface(&s);
        // Row i: [p_{i+1}] over (1, omega).
        let fp_to_std: Vec<Vec<RationalFunction>> =
            (1..=n + 1).map(|i| s.fixed_point_class(i).coords().to_vec()).collect();
        // Row c: basis class c over the fixed points, gamma = sum_i
        // (gamma|_{p_i} / (wL_i wR_i)) [p_i].
        let std_to_fp: Vec<Vec<RationalFunction>> = (0..=n)
            .map(|cidx| {
                let cls = if cidx == 0 { s.one_class() } else { s.omega_class(cidx) };
                (1..=n + 1)
                    .map(|i| {
                        s.restriction(&cls, i)
                            .div(&RationalFunction::from_poly(s.wl(i).mul(s.wr(i))))
                    })
                    .collect()
            })
            .collect();
        for m in 0..=3u32 {
            for mu in enumerate_weighted(m, f.basis_size()) {
                let v = FockVector::monomial(mu);
                let rt = FockSpace::relabel_basis(
                    &FockSpace::relabel_basis(&v, &std_to_fp),
                    &fp_to_std,
                );
                let diff = rt.sub(&v);
                assert!(diff.terms().all(|(_, x)| x.is_zero()), "n={n} m={m}");
            }
        }
    }
}

#[test]
fn json_export() {
    let f = space(1);
    let v = f
        .nakajima_vector(&WeightedPartition::new(vec![(2, 1), (1, 0)]))
        .scale(&rat(3, 2));
    let j = v.to_json();
    assert!(j.get("2(w1).1(1)").is_some());
}
