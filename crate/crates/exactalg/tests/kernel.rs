//! Kernel unit tests: spec-level examples for polynomial arithmetic,
//! rational-function equality, theta reduction, and series expansion.

use exactalg::{
    int, poly_from_json, poly_to_json, rat, ratfunc_eq, ratfunc_to_json, series_expand,
    series_expand_taylor, ExactAlgError, RationalFunction, SparsePoly, Var,
};

fn t1() -> SparsePoly {
    SparsePoly::var(Var::T1)
}
fn t2() -> SparsePoly {
    SparsePoly::var(Var::T2)
}
fn u() -> SparsePoly {
    SparsePoly::var(Var::U)
}
fn s1() -> SparsePoly {
    SparsePoly::var(Var::S(1))
}
fn rf(p: SparsePoly) -> RationalFunction {
    RationalFunction::from_poly(p)
}

#[test]
fn poly_difference_of_squares() {
    let lhs = t1().add(&t2()).mul(&t1().sub(&t2()));
    let rhs = t1().mul(&t1()).sub(&t2().mul(&t2()));
    assert_eq!(lhs, rhs);
}

#[test]
fn poly_u_squared() {
    assert_eq!(u().mul(&u()), SparsePoly::var_pow(Var::U, 2));
}

#[test]
fn poly_additive_inverse() {
    let p = t1().mul(&t2()).add(&u().pow(3)).scale(&rat(7, 3));
    assert!(p.add(&p.neg()).is_zero());
}

#[test]
fn poly_laurent_in_u() {
    let p = SparsePoly::var_pow(Var::U, -2).mul(&SparsePoly::var_pow(Var::U, 5));
    assert_eq!(p, SparsePoly::var_pow(Var::U, 3));
}

#[test]
fn exact_division() {
    let p = t1().pow(2).sub(&t2().pow(2));
    let q = p.try_div_exact(&t1().sub(&t2())).unwrap();
    assert_eq!(q, t1().add(&t2()));
    assert!(p.try_div_exact(&t1().add(&SparsePoly::one())).is_none());
}

#[test]
fn ratfunc_eq_cancellation() {
    // (t1^2 - t2^2)/(t1 - t2) == t1 + t2
    let a = RationalFunction::new(t1().pow(2).sub(&t2().pow(2)), t1().sub(&t2()));
    let b = rf(t1().add(&t2()));
    assert!(ratfunc_eq(&a, &b));
}

#[test]
fn ratfunc_eq_q_vs_u() {
    // q/(1+q)^2 == -u^2/(1-u^2)^2 under q = -u^2.
    let q = SparsePoly::var_pow(Var::U, 2).neg();
    let lhs = RationalFunction::new(q.clone(), SparsePoly::one().add(&q).pow(2));
    let rhs = RationalFunction::new(
        SparsePoly::var_pow(Var::U, 2).neg(),
        SparsePoly::one().sub(&SparsePoly::var_pow(Var::U, 2)).pow(2),
    );
    assert!(ratfunc_eq(&lhs, &rhs));
}

#[test]
fn ratfunc_eq_zero_coefficient_var() {
    // 1/q == 1/(q + 0*s1)
    let q = SparsePoly::var_pow(Var::U, 2).neg();
    let a = RationalFunction::new(SparsePoly::one(), q.clone());
    let b = RationalFunction::new(SparsePoly::one(), q.add(&s1().scale(&int(0))));
    assert!(ratfunc_eq(&a, &b));
}

#[test]
fn reduce_mod_theta2_examples() {
    // (t1+t2)^2 -> (0, 0)
    let theta = t1().add(&t2());
    let d = rf(theta.pow(2)).reduce_mod_theta2().unwrap();
    assert!(d.base().is_zero() && d.eps1().is_zero());

    // (t1+t2)*g(t1) -> (0, g(t1))
    let g = t1().pow(3).scale(&rat(5, 2));
    let d = rf(theta.mul(&g)).reduce_mod_theta2().unwrap();
    assert!(d.base().is_zero());
    assert!(ratfunc_eq(d.eps1(), &rf(g)));

    // 1/(t1*t2) -> base -1/t1^2, eps1 -1/t1^3
    let f = RationalFunction::new(SparsePoly::one(), t1().mul(&t2()));
    let d = f.reduce_mod_theta2().unwrap();
    let m_t1_sq = RationalFunction::new(SparsePoly::one().neg(), t1().pow(2));
    let m_t1_cu = RationalFunction::new(SparsePoly::one().neg(), t1().pow(3));
    assert!(ratfunc_eq(d.base(), &m_t1_sq));
    assert!(ratfunc_eq(d.eps1(), &m_t1_cu));
}

#[test]
fn reduce_mod_theta2_pole() {
    let theta = t1().add(&t2());
    let f = RationalFunction::new(SparsePoly::one(), theta);
    assert_eq!(f.reduce_mod_theta2().unwrap_err(), ExactAlgError::PoleAtTheta);
}

#[test]
fn reduce_mod_theta2_multiplicative() {
    let f = RationalFunction::new(t1().add(&t2().scale(&int(3))), t1().mul(&t2()));
    let g = RationalFunction::new(t2().pow(2).sub(&t1().pow(2)), t2().sub(&t1().scale(&int(2))));
    let lhs = f.mul(&g).reduce_mod_theta2().unwrap();
    let rhs = f.reduce_mod_theta2().unwrap().mul(&g.reduce_mod_theta2().unwrap());
    assert!(lhs.eq(&rhs));
}

#[test]
fn series_geometric() {
    // s/(1-s) to order 3 -> s + s^2 + s^3
    let f = RationalFunction::new(s1(), SparsePoly::one().sub(&s1()));
    let s = series_expand_taylor(&f, Var::S(1), 3).unwrap();
    assert!(s.coeff(0).is_zero());
    for k in 1..=3 {
        assert!(ratfunc_eq(&s.coeff(k), &RationalFunction::one()));
    }
}

#[test]
fn series_q_over_one_plus_q_sq() {
    // q/(1+q)^2 = q - 2q^2 + ... in q; in u: -u^2/(1-u^2)^2, expand in u.
    let q = SparsePoly::var_pow(Var::U, 2).neg();
    let f = RationalFunction::new(q.clone(), SparsePoly::one().add(&q).pow(2));
    let s = series_expand(&f, Var::U, 4).unwrap();
    assert_eq!(s.offset, 2);
    // coefficient of u^2 is -1 (q = -u^2), of u^4 is -2 (=> -2q^2 = -2u^4).
    assert!(ratfunc_eq(&s.coeff(2), &RationalFunction::constant(int(-1))));
    assert!(ratfunc_eq(&s.coeff(4), &RationalFunction::constant(int(-2))));
}

#[test]
fn series_expansion_of_log_derivative_shape() {
    // 1/(1-(-q)^{m-1} s) for m=3 in s to order 2: 1 + q^2 s + q^4 s^2.
    // (-q)^2 = q^2 = u^4.
    let x = SparsePoly::var_pow(Var::U, 4).mul(&s1());
    let f = RationalFunction::new(SparsePoly::one(), SparsePoly::one().sub(&x));
    let s = series_expand_taylor(&f, Var::S(1), 2).unwrap();
    assert!(ratfunc_eq(&s.coeff(0), &RationalFunction::one()));
    assert!(ratfunc_eq(&s.coeff(1), &rf(SparsePoly::var_pow(Var::U, 4))));
    assert!(ratfunc_eq(&s.coeff(2), &rf(SparsePoly::var_pow(Var::U, 8))));
}

#[test]
fn series_not_expandable() {
    let f = RationalFunction::new(SparsePoly::one(), s1());
    assert!(series_expand_taylor(&f, Var::S(1), 2).is_err());
}

#[test]
fn json_round_trip() {
    let p = t1().pow(2).mul(&SparsePoly::var_pow(Var::U, -3)).add(&s1().scale(&rat(-7, 5)));
    let j = poly_to_json(&p);
    assert_eq!(poly_from_json(&j).unwrap(), p);
    let f = RationalFunction::new(p, t1().add(&t2()));
    let j = ratfunc_to_json(&f);
    let back = exactalg::ratfunc_from_json(&j).unwrap();
    assert!(ratfunc_eq(&back, &f));
}

#[test]
fn derivative_quotient_rule() {
    // d/du [ u^2/(1-u) ] = (2u - u^2)/(1-u)^2
    let f = RationalFunction::new(u().pow(2), SparsePoly::one().sub(&u()));
    let d = f.derivative(Var::U);
    let expect = RationalFunction::new(
        u().scale(&int(2)).sub(&u().pow(2)),
        SparsePoly::one().sub(&u()).pow(2),
    );
    assert!(ratfunc_eq(&d, &expect));
}
