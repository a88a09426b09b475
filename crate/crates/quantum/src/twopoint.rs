//! Two-point values `<mu| Theta |nu>` with `Theta = (t1+t2) (Omega_0 +
//! Omega_+)`.
//!
//! The value is a finite sum of exact rational-function coefficients against
//! symbolic logarithms, reported split into the punctual part (coefficients
//! of `log((1-(-q)^k)/(1-(-q)))`) and the non-punctual part (coefficients of
//! `log(1 - (-q)^k s^alpha)` for positive roots `alpha`); the two parts are
//! never summed into a single scalar.

use crate::engine::{laurent_coefficients, vacuum_value, EEngine};
use crate::{HilbContext, QuantumError};
use combinat::{MultiPartition, WeightedPartition};
use exactalg::{int, ratfunc_to_json, theta, RationalFunction, SparsePoly, Var};
use fock::FockVector;
use serde_json::{json, Value};
use surface::Root;

/// A two-point value: symbolic-log coefficients, split by log type.
#[derive(Debug, Clone)]
pub struct TwoPointValue {
    /// `(k, coefficient of log((1-(-q)^k)/(1-(-q))))`.
    pub punctual: Vec<(i64, RationalFunction)>,
    /// `(alpha, k, coefficient of log(1-(-q)^k s^alpha))`.
    pub nonpunctual: Vec<(Root, i64, RationalFunction)>,
}

impl TwoPointValue {
    pub fn is_zero(&self) -> bool {
        self.punctual.iter().all(|(_, c)| c.is_zero())
            && self.nonpunctual.iter().all(|(_, _, c)| c.is_zero())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "punctual": self.punctual.iter().map(|(k, c)| json!({
                "k": k, "coeff": ratfunc_to_json(c),
            })).collect::<Vec<_>>(),
            "nonpunctual": self.nonpunctual.iter().map(|(a, k, c)| json!({
                "alpha": [a.i, a.j], "k": k, "coeff": ratfunc_to_json(c),
            })).collect::<Vec<_>>(),
        })
    }

    /// Human-readable rendering, one log term per line.
    pub fn render_text(&self) -> String {
        let mut lines = vec![];
        for (k, c) in &self.punctual {
            lines.push(format!("({c}) * log((1-(-q)^{k})/(1-(-q)))"));
        }
        for (a, k, c) in &self.nonpunctual {
            let s: Vec<String> = (a.i..a.j).map(|l| format!("s{l}")).collect();
            lines.push(format!("({c}) * log(1-(-q)^{k}*{})", s.join("*")));
        }
        if lines.is_empty() {
            lines.push("0".into());
        }
        lines.join("\n")
    }
}

/// Laurent decomposition of a single `(-q)`-Laurent scalar.
fn laurent_scalar(f: &RationalFunction) -> Vec<(i64, RationalFunction)> {
    laurent_coefficients(std::slice::from_ref(&vec![f.clone()]))
        .into_iter()
        .map(|(k, m)| (k, m[0][0].clone()))
        .collect()
}

/// `<x| Theta |y>` for arbitrary grade-`m` Fock vectors in the `(1, omega)`
/// label basis.
pub fn two_point_vectors(
    ctx: &HilbContext,
    x: &FockVector,
    y: &FockVector,
) -> Result<TwoPointValue, QuantumError> {
    assert_eq!(x.grade(), ctx.m, "grade mismatch");
    assert_eq!(y.grade(), ctx.m, "grade mismatch");
    let th = RationalFunction::from_poly(theta());
    let pairing = ctx.space.inner_product(x, y);
    let mut out = TwoPointValue { punctual: vec![], nonpunctual: vec![] };

    // Non-punctual part: the (alpha, k) coefficient is theta times minus the
    // k-th Laurent coefficient of <x| E_alpha |y>.
    for alpha in Root::positive(ctx.n) {
        let engine = EEngine::over_omega_basis(&ctx.surface, alpha);
        let mut e0 = RationalFunction::zero();
        for (mu, cx) in x.terms() {
            if cx.is_zero() {
                continue;
            }
            for (nu, cy) in y.terms() {
                if cy.is_zero() {
                    continue;
                }
                let b = engine.bilinear(mu, 0, nu);
                if !b.is_zero() {
                    e0 = e0.add(&b.mul(cx).mul(cy));
                }
            }
        }
        let e = e0.sub(&vacuum_value().mul(&pairing));
        crate::engine::check_laurent(&e, ctx.m)?;
        for (k, c) in laurent_scalar(&e) {
            out.nonpunctual.push((alpha, k, th.mul(&c).neg()));
        }
    }

    // Punctual part: theta * <x| -O_k |y> for each k-summand of Omega_0.
    let s = &ctx.surface;
    let one = s.one_class();
    let scale = RationalFunction::from_poly(
        SparsePoly::var(Var::T1).mul(&SparsePoly::var(Var::T2)).scale(&int(s.points() as i64)),
    );
    for k in 2..=ctx.m as i32 {
        let mut w = ctx
            .space
            .apply_p(-k, one.coords(), &ctx.space.apply_p(k, one.coords(), y))
            .scale_rf(&scale.neg());
        for i in 1..=ctx.n {
            let term = ctx.space.apply_p(
                -k,
                s.e_class(i).coords(),
                &ctx.space.apply_p(k, s.omega_class(i).coords(), y),
            );
            w = w.sub(&term);
        }
        let v = ctx.space.inner_product(x, &w);
        if !v.is_zero() {
            out.punctual.push((k as i64, th.mul(&v)));
        }
    }
    Ok(out)
}

/// `<mu| Theta |nu>` on normalized Nakajima basis vectors.
pub fn two_point(
    ctx: &HilbContext,
    mu: &WeightedPartition,
    nu: &WeightedPartition,
) -> Result<TwoPointValue, QuantumError> {
    two_point_vectors(ctx, &ctx.space.nakajima_vector(mu), &ctx.space.nakajima_vector(nu))
}

/// `<[J_lambda]| Theta |[J_eta]>` on fixed-point classes.
pub fn two_point_fixed(
    ctx: &HilbContext,
    lam: &MultiPartition,
    eta: &MultiPartition,
) -> Result<TwoPointValue, QuantumError> {
    let x = symfun::fixedpoint_to_nakajima(lam, &ctx.surface);
    let y = symfun::fixedpoint_to_nakajima(eta, &ctx.surface);
    two_point_vectors(ctx, &x, &y)
}
