//! Symmetric functions in the power-sum basis over exact rational-function
//! coefficients: Schur polynomials (Murnaghan-Nakayama), integral Jack
//! polynomials (eigenoperator construction), the involution `omega`, the
//! grade-preserving operators `A(q)` and `B(q)`, and the dictionary sending
//! fixed-point classes of the Hilbert scheme to the Nakajima basis.
//!
//! Convention. `jack` is the integral Jack polynomial in the classical
//! `alpha`-parameter, normalized so the coefficient of `p_1^{|lambda|}` is
//! `1`. The surface's Jack parameter `theta = wL_i/wR_i` enters through
//! `alpha = -theta` ([`JackParam::alpha`]); at the equivariant specialization
//! `t2 = -t1` every `theta_i` is `-1`, so `alpha = 1` and Jack polynomials
//! become proportional to Schur polynomials: `s_lambda =
//! (dim lambda / |lambda|!) J_lambda` (sign-free in these conventions).

mod ab;
mod dict;
mod jack;
mod symfunc;

pub use ab::{operator_a, operator_b};
pub use dict::fixedpoint_to_nakajima;
pub use jack::{jack, jack_in_powersums, JackParam};
pub use symfunc::{dimension, schur_in_powersums, SymFunc};

use thiserror::Error;

/// Errors surfaced by the symmetric-function layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymfunError {
    /// The triangular eigenfunction solve for a Jack polynomial hit two
    /// comparable partitions with equal eigenvalue (impossible at a generic
    /// parameter; indicates a degenerate specialization).
    #[error("eigenvalue collision in the Jack triangular solve")]
    EigenvalueCollision,
}
