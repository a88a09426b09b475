//! Dual numbers modulo `(t1+t2)^2`.
//!
//! A `DualTheta` represents `f(t1, -t1 + eps, u, s)` truncated at `eps^2`
//! where `eps = t1 + t2`; both components are rational functions free of
//! `t2`. Multiplication drops the `eps^2` term.

use crate::ratfunc::RationalFunction;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualTheta {
    base: RationalFunction,
    eps1: RationalFunction,
}

impl DualTheta {
    pub fn new(base: RationalFunction, eps1: RationalFunction) -> Self {
        DualTheta { base, eps1 }
    }

    pub fn zero() -> Self {
        DualTheta { base: RationalFunction::zero(), eps1: RationalFunction::zero() }
    }

    pub fn base(&self) -> &RationalFunction {
        &self.base
    }

    pub fn eps1(&self) -> &RationalFunction {
        &self.eps1
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.eps1.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        DualTheta {
            base: self.base.add(&other.base),
            eps1: self.eps1.add(&other.eps1),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        DualTheta {
            base: self.base.sub(&other.base),
            eps1: self.eps1.sub(&other.eps1),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        DualTheta {
            base: self.base.mul(&other.base),
            eps1: self.base.mul(&other.eps1).add(&self.eps1.mul(&other.base)),
        }
    }

    pub fn eq(&self, other: &Self) -> bool {
        self.base.eq(&other.base) && self.eps1.eq(&other.eps1)
    }
}

impl fmt::Display for DualTheta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + eps*({})", self.base, self.eps1)
    }
}
