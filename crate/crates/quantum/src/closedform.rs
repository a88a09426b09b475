//! Closed-form assembly of the two-point quantum operator and the divisor
//! multiplication matrices.
//!
//! The purely quantum part of divisor multiplication is a derivative of a
//! single generating operator
//! `Omega = Omega_0 + Omega_+`, where
//! `Omega_+ = sum_{alpha > 0} sum_k A_{alpha,k} log(1 - (-q)^k s^alpha)` with
//! `A_{alpha,k}` minus the `(-q)^k`-Laurent coefficient of `E_alpha(q)`
//! (multiples `d alpha` of a primitive root are generated inside the same
//! logarithm), and
//! `Omega_0 = -sum_{k >= 1} [ (n+1) t1 t2 p_{-k}(1) p_k(1)
//!   + sum_i p_{-k}(E_i) p_k(omega_i) ] log((1-(-q)^k)/(1-(-q)))`
//! is the punctual part (diagonal in the curve classes, so it carries no
//! `s`-dependence).  Then
//! `M_D = classical + theta * q d/dq Omega` and
//! `M_{(1,omega_i)} = classical + theta * s_i d/ds_i Omega_+`.
//!
//! A [`ClosedFormOperator`] stores the operator as a classical matrix plus a
//! list of [`QuantumTerm`]s, each a coefficient matrix tagged with the root
//! (or `None` for a punctual term), the exponent `k`, and a [`TermShape`]
//! recording which function of `q` and `s` multiplies it.

use crate::engine::{e_alpha_matrix, laurent_coefficients};
use crate::{HilbContext, QuantumError};
use combinat::MultiPartition;
use exactalg::{
    int, neg_q_pow, ratfunc_to_json, theta, BigRat, RationalFunction, SparsePoly, Var,
};
use serde_json::{json, Value};
use surface::Root;

/// A divisor class on the Hilbert scheme: `D = -|2,1,..,1>` or `(1, omega_i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Divisor {
    D,
    Omega(usize),
}

/// The scalar function of `q`, `s` attached to a quantum term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermShape {
    /// `log(1 - (-q)^k s^alpha)`, resp. `log((1-(-q)^k)/(1-(-q)))` when
    /// punctual: the undifferentiated two-point operator.
    Log,
    /// `q d/dq` of the log: the `M_D` direction.
    DLogQ,
    /// `s_i d/ds_i` of the log: the `M_{(1,omega_i)}` direction.
    DLogS(usize),
}

impl TermShape {
    pub fn tag(&self) -> &'static str {
        match self {
            TermShape::Log => "log",
            TermShape::DLogQ => "dlog_q",
            TermShape::DLogS(_) => "dlog_s",
        }
    }
}

/// One quantum summand: `matrix` times the scalar determined by
/// (`alpha`, `k`, `shape`). `alpha = None` marks a punctual term.
#[derive(Debug, Clone)]
pub struct QuantumTerm {
    pub alpha: Option<Root>,
    pub k: i64,
    pub matrix: Vec<Vec<RationalFunction>>,
    pub shape: TermShape,
}

/// A divisor-multiplication (or two-point) operator in closed form over the
/// grade-`m` normalized Nakajima basis.
#[derive(Debug, Clone)]
pub struct ClosedFormOperator {
    pub m: u32,
    pub n: usize,
    pub basis: Vec<String>,
    pub classical: Vec<Vec<RationalFunction>>,
    pub quantum: Vec<QuantumTerm>,
}

/// `s^alpha = (s_i .. s_{j-1})^d` for the root `alpha = d * alpha_{ij}`.
fn s_monomial(alpha: Root) -> SparsePoly {
    let mut p = SparsePoly::one();
    for l in alpha.i..alpha.j {
        p = p.mul(&SparsePoly::var(Var::S(l as u8)));
    }
    p.pow(alpha.d)
}

/// `-c * X / (1 - X)` with `X = (-q)^k s`, cleared of negative `u`-powers.
fn dlog_value(c: i64, k: i64, s: &SparsePoly) -> RationalFunction {
    if c == 0 {
        return RationalFunction::zero();
    }
    if k >= 0 {
        let x = s.mul(&neg_q_pow(k));
        RationalFunction::new(x.scale(&int(-c)), SparsePoly::one().sub(&x))
    } else {
        // Multiply through by (-q)^{-k}: X/(1-X) = s / ((-q)^{-k} - s).
        RationalFunction::new(s.scale(&int(-c)), neg_q_pow(-k).sub(s))
    }
}

/// The scalar multiplying a quantum term's matrix, for the differentiated
/// shapes.  Panics on [`TermShape::Log`], which is not a rational function of
/// `q` (the undifferentiated operator is handled symbolically).
pub fn scalar_shape(shape: TermShape, alpha: Option<Root>, k: i64) -> RationalFunction {
    match (shape, alpha) {
        (TermShape::Log, _) => panic!("log terms have no rational scalar"),
        // q d/dq log(1 - (-q)^k s^alpha) = -k X/(1-X).
        (TermShape::DLogQ, Some(a)) => dlog_value(k, k, &s_monomial(a)),
        // s_i d/ds_i log(1 - (-q)^k s^alpha) = -(alpha, omega_i) X/(1-X).
        (TermShape::DLogS(i), Some(a)) => {
            let c = if a.i <= i && i < a.j { a.d as i64 } else { 0 };
            dlog_value(c, k, &s_monomial(a))
        }
        // q d/dq log((1-(-q)^k)/(1-(-q)))
        //   = -k(-q)^k/(1-(-q)^k) + (-q)/(1-(-q)).
        (TermShape::DLogQ, None) => {
            let a = dlog_value(k, k, &SparsePoly::one());
            let b = dlog_value(-1, 1, &SparsePoly::one());
            a.add(&b)
        }
        // The punctual part carries no s-dependence.
        (TermShape::DLogS(_), None) => RationalFunction::zero(),
    }
}

impl ClosedFormOperator {
    fn new(ctx: &HilbContext, classical: Vec<Vec<RationalFunction>>) -> Self {
        ClosedFormOperator {
            m: ctx.m,
            n: ctx.n,
            basis: ctx.basis.iter().map(|mu| mu.to_string()).collect(),
            classical,
            quantum: vec![],
        }
    }

    /// The full matrix `classical + theta * sum_terms scalar * matrix`.
    /// Requires every term to carry a differentiated shape.
    pub fn full_matrix(&self) -> Vec<Vec<RationalFunction>> {
        let dim = self.classical.len();
        let th = RationalFunction::from_poly(theta());
        let mut out = self.classical.clone();
        for term in &self.quantum {
            let scalar = th.mul(&scalar_shape(term.shape, term.alpha, term.k));
            if scalar.is_zero() {
                continue;
            }
            for i in 0..dim {
                for j in 0..dim {
                    if !term.matrix[i][j].is_zero() {
                        out[i][j] = out[i][j].add(&scalar.mul(&term.matrix[i][j]));
                    }
                }
            }
        }
        out
    }

    /// JSON export of the operator.
    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "n": self.n,
            "basis": self.basis,
            "classical": matrix_to_json(&self.classical),
            "quantum": self.quantum.iter().map(|t| json!({
                "alpha": t.alpha.map(|a| json!([a.i, a.j])).unwrap_or(Value::Null),
                "k": t.k,
                "matrix": matrix_to_json(&t.matrix),
                "shape": t.shape.tag(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// JSON array-of-arrays of rational functions.
pub fn matrix_to_json(m: &[Vec<RationalFunction>]) -> Value {
    Value::Array(
        m.iter()
            .map(|row| Value::Array(row.iter().map(ratfunc_to_json).collect()))
            .collect(),
    )
}

/// The non-punctual two-point operator `Omega_+` (all terms carry
/// [`TermShape::Log`]).
pub fn omega_plus(ctx: &HilbContext) -> Result<ClosedFormOperator, QuantumError> {
    let dim = ctx.basis.len();
    let mut op = ClosedFormOperator::new(ctx, zero_matrix(dim));
    for alpha in Root::positive(ctx.n) {
        let e = e_alpha_matrix(ctx, alpha)?;
        for (k, coeff) in laurent_coefficients(&e) {
            // A_{alpha,k} = -(coefficient of (-q)^k in E_alpha).
            let matrix = coeff.iter().map(|row| row.iter().map(|v| v.neg()).collect()).collect();
            op.quantum.push(QuantumTerm { alpha: Some(alpha), k, matrix, shape: TermShape::Log });
        }
    }
    Ok(op)
}

/// The punctual two-point operator `Omega_0` (all terms carry
/// [`TermShape::Log`] with `alpha = None`). The `k = 1` logarithm vanishes
/// and modes `k > m` annihilate grade `m`, so only `k = 2..=m` appear.
pub fn omega_zero(ctx: &HilbContext) -> ClosedFormOperator {
    let dim = ctx.basis.len();
    let s = &ctx.surface;
    let one = s.one_class();
    let scale = RationalFunction::from_poly(
        SparsePoly::var(Var::T1).mul(&SparsePoly::var(Var::T2)).scale(&int(s.points() as i64)),
    );
    let mut op = ClosedFormOperator::new(ctx, zero_matrix(dim));
    for k in 2..=ctx.m as i32 {
        let mut matrix = zero_matrix(dim);
        for (j, mu) in ctx.basis.iter().enumerate() {
            let v = ctx.space.nakajima_vector(mu);
            // -(n+1) t1 t2 p_{-k}(1) p_k(1) applied to the basis vector ...
            let mut w = ctx
                .space
                .apply_p(-k, one.coords(), &ctx.space.apply_p(k, one.coords(), &v))
                .scale_rf(&scale.neg());
            // ... then -sum_i p_{-k}(E_i) p_k(omega_i).
            for i in 1..=ctx.n {
                let ei = s.e_class(i);
                let wi = s.omega_class(i);
                let term =
                    ctx.space.apply_p(-k, ei.coords(), &ctx.space.apply_p(k, wi.coords(), &v));
                w = w.sub(&term);
            }
            for (i, nu) in ctx.basis.iter().enumerate() {
                let c = w.coeff(nu);
                if !c.is_zero() {
                    matrix[i][j] = c.scale(&ctx.zfactor(i));
                }
            }
        }
        if matrix.iter().any(|row| row.iter().any(|e| !e.is_zero())) {
            op.quantum.push(QuantumTerm {
                alpha: None,
                k: k as i64,
                matrix,
                shape: TermShape::Log,
            });
        }
    }
    op
}

fn zero_matrix(dim: usize) -> Vec<Vec<RationalFunction>> {
    vec![vec![RationalFunction::zero(); dim]; dim]
}

/// Classical (small-quantum-parameter) multiplication by a divisor on the
/// normalized Nakajima basis.  Divisors act diagonally on the fixed-point
/// classes `[J_lambda]`: `D` by the sum of equivariant content sums, and
/// `(1, omega_i)` by `sum_l |lambda_l| omega_i|_{p_l}`; the matrix is the
/// spectral reassembly `sum_lambda eig_lambda x_lambda (G x_lambda)^T /
/// <x_lambda, x_lambda>` over the orthogonal fixed-point eigenvectors.
pub fn classical_multiplication(ctx: &HilbContext, divisor: Divisor) -> Vec<Vec<RationalFunction>> {
    let dim = ctx.basis.len();
    let s = &ctx.surface;
    let mut out = zero_matrix(dim);
    for lam in MultiPartition::enumerate(ctx.m, s.points()) {
        let eig = match divisor {
            Divisor::D => {
                // `D = -|2,1^{m-2}>`: the localization eigenvalue is minus
                // the sum of equivariant content sums.
                let mut acc = RationalFunction::zero();
                for (l, part) in lam.components().iter().enumerate() {
                    let wl = RationalFunction::from_poly(s.wl(l + 1).clone());
                    let wr = RationalFunction::from_poly(s.wr(l + 1).clone());
                    acc = acc.sub(&part.content_sum(&wl, &wr));
                }
                acc
            }
            Divisor::Omega(i) => {
                let cls = s.omega_class(i);
                let mut acc = RationalFunction::zero();
                for (l, part) in lam.components().iter().enumerate() {
                    if part.size() > 0 {
                        acc = acc.add(
                            &s.restriction(&cls, l + 1).scale(&int(part.size() as i64)),
                        );
                    }
                }
                acc
            }
        };
        if eig.is_zero() {
            continue;
        }
        // Normalized coordinates of the fixed-point class.
        let v = symfun::fixedpoint_to_nakajima(&lam, s);
        let x: Vec<RationalFunction> =
            ctx.basis.iter().enumerate().map(|(i, mu)| v.coeff(mu).scale(&ctx.zfactor(i))).collect();
        let gx: Vec<RationalFunction> = (0..dim)
            .map(|i| {
                let mut acc = RationalFunction::zero();
                for j in 0..dim {
                    if !x[j].is_zero() && !ctx.gram[i][j].is_zero() {
                        acc = acc.add(&ctx.gram[i][j].mul(&x[j]));
                    }
                }
                acc
            })
            .collect();
        let norm = (0..dim).fold(RationalFunction::zero(), |acc, i| acc.add(&x[i].mul(&gx[i])));
        let w = eig.div(&norm);
        for i in 0..dim {
            if x[i].is_zero() {
                continue;
            }
            let xi = x[i].mul(&w);
            for j in 0..dim {
                if !gx[j].is_zero() {
                    out[i][j] = out[i][j].add(&xi.mul(&gx[j]));
                }
            }
        }
    }
    out
}

/// Assemble the closed-form divisor operator `M_D` or `M_{(1,omega_i)}`.
pub fn divisor_operator(ctx: &HilbContext, divisor: Divisor) -> Result<ClosedFormOperator, QuantumError> {
    let plus = omega_plus(ctx)?;
    let mut op = ClosedFormOperator::new(ctx, classical_multiplication(ctx, divisor));
    match divisor {
        Divisor::D => {
            for t in plus.quantum {
                op.quantum.push(QuantumTerm { shape: TermShape::DLogQ, ..t });
            }
            for t in omega_zero(ctx).quantum {
                op.quantum.push(QuantumTerm { shape: TermShape::DLogQ, ..t });
            }
        }
        Divisor::Omega(i) => {
            for t in plus.quantum {
                let a = t.alpha.expect("Omega_+ terms carry a root");
                if a.i <= i && i < a.j {
                    op.quantum.push(QuantumTerm { shape: TermShape::DLogS(i), ..t });
                }
            }
        }
    }
    Ok(op)
}

/// All divisor operators: `(M_D, [M_{(1,omega_1)}, .., M_{(1,omega_n)}])`.
pub fn divisor_operators(
    ctx: &HilbContext,
) -> Result<(ClosedFormOperator, Vec<ClosedFormOperator>), QuantumError> {
    let d = divisor_operator(ctx, Divisor::D)?;
    let omegas = (1..=ctx.n)
        .map(|i| divisor_operator(ctx, Divisor::Omega(i)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((d, omegas))
}

// ------------------------------------------------------------------- latex

fn latex_monomial(vars: &[Var], e: &[i32], c: &BigRat) -> String {
    let mut factors: Vec<String> = vec![];
    for (i, &x) in e.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let (base, exp) = match vars[i] {
            Var::U => ("(-q)".to_string(), x / 2),
            Var::T1 => ("t_1".to_string(), x),
            Var::T2 => ("t_2".to_string(), x),
            Var::S(k) => (format!("s_{{{k}}}"), x),
        };
        factors.push(if exp == 1 { base } else { format!("{base}^{{{exp}}}") });
    }
    use num::{One, Signed};
    let mag = c.abs();
    if factors.is_empty() {
        mag.to_string()
    } else if mag.is_one() {
        factors.join(" ")
    } else {
        format!("{mag} {}", factors.join(" "))
    }
}

fn latex_poly(p: &SparsePoly) -> String {
    use num::Signed;
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().iter().enumerate() {
        let sep = match (i == 0, c.is_negative()) {
            (true, false) => "",
            (true, true) => "-",
            (false, false) => " + ",
            (false, true) => " - ",
        };
        out.push_str(sep);
        out.push_str(&latex_monomial(p.vars(), e, c));
    }
    out
}

/// LaTeX for a single rational function (a `\frac` when a denominator is
/// present).
pub fn latex_entry(f: &RationalFunction) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let num = latex_poly(f.numer());
    let dens = f.den_factors();
    if dens.is_empty() {
        return num;
    }
    let den: Vec<String> = dens
        .iter()
        .map(|(g, e)| {
            let body = format!("({})", latex_poly(g));
            if *e == 1 { body } else { format!("{body}^{{{e}}}") }
        })
        .collect();
    format!("\\frac{{{num}}}{{{}}}", den.join(""))
}

/// LaTeX matrix in the layout of the reference data: a `pmatrix` with one
/// row per basis vector.
pub fn latex_matrix(m: &[Vec<RationalFunction>]) -> String {
    let mut out = String::from("\\begin{pmatrix}\n");
    for row in m {
        let cells: Vec<String> = row.iter().map(latex_entry).collect();
        out.push_str(&cells.join(" & "));
        out.push_str(" \\\\\n");
    }
    out.push_str("\\end{pmatrix}\n");
    out
}
