//! Exact arithmetic kernel.
//!
//! Provides arbitrary-precision rationals, sparse multivariate polynomials in
//! the variables `t1, t2, u, s1..sn` (Laurent exponents permitted only for
//! `u`, where `u^2 = -q`), rational functions over them with a factored
//! denominator representation, dual-number reduction modulo `(t1+t2)^2`, and
//! truncated series expansion.
//!
//! All values are immutable after construction and arithmetic is pure.

mod dual;
mod json;
pub mod linalg;
mod poly;
mod ratfunc;
mod series;
mod var;

pub use dual::DualTheta;
pub use json::{poly_from_json, poly_to_json, ratfunc_from_json, ratfunc_to_json};
pub use poly::{neg_q_pow, theta, Expo, SparsePoly};
pub use ratfunc::{ratfunc_eq, RationalFunction};
pub use series::{series_expand, series_expand_taylor, Series};
pub use var::{intern as intern_vars, union as union_vars, Var, VarSet};

use thiserror::Error;

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type BigRat = num::BigRational;
/// Arbitrary-precision integer.
pub type BigInt = num::BigInt;

/// Errors surfaced by the kernel.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactAlgError {
    /// `reduce_mod_theta2` was applied to a rational function whose
    /// denominator vanishes identically at `t2 = -t1`.
    #[error("denominator vanishes identically at t2 = -t1")]
    PoleAtTheta,
    /// `series_expand` was asked for a Taylor expansion of a function with a
    /// genuine pole at the expansion point.
    #[error("denominator vanishes at {var} = 0 beyond the declared offset")]
    NotExpandable { var: Var },
    /// A Laurent (negative) exponent was requested for a variable other than
    /// `u`.
    #[error("negative exponent on non-Laurent variable {var}")]
    NegativeExponent { var: Var },
}

/// Convenience constructor for a small rational.
pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

/// Convenience constructor for a small integer as a rational.
pub fn int(n: i64) -> BigRat {
    BigRat::from(BigInt::from(n))
}
