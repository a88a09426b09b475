//! The quantum-multiplication engine for the Hilbert scheme of points on the
//! A_n surface: `E^s_alpha(q)` matrix elements, assembly of the punctual and
//! non-punctual two-point operators `Omega_0` and `Omega_+`, classical and
//! quantum divisor-multiplication matrices, residues of the quantum
//! differential equation, and the verification suites.

mod closedform;
mod engine;
mod oracle;
mod twopoint;
pub mod verify;

pub use closedform::{
    classical_multiplication, divisor_operator, divisor_operators, latex_entry, latex_matrix,
    matrix_to_json, omega_plus, omega_zero, scalar_shape, ClosedFormOperator, Divisor,
    QuantumTerm, TermShape,
};
pub use engine::{
    e_alpha_bilinear, e_alpha_matrix, laurent_coefficients, vacuum_value, EEngine,
};
pub use oracle::BeadOracle;
pub use twopoint::{two_point, two_point_fixed, two_point_vectors, TwoPointValue};

use combinat::WeightedPartition;
use exactalg::{linalg, BigRat, RationalFunction};
use fock::FockSpace;
use surface::SurfaceData;
use thiserror::Error;

/// Errors surfaced by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuantumError {
    /// An entry of `E_alpha` failed to reduce to a Laurent polynomial in
    /// `(-q)` with exponents in `[-(m-1), m-1]` (signals a recursion bug).
    #[error("a (1+q)-type denominator survived in E_alpha")]
    DenominatorSurvived,
}

/// Shared per-`(m, n)` data: the surface, the Fock space over the
/// `(1, omega)` labels, the grade-`m` normalized Nakajima basis, and the Gram
/// matrix with its inverse.
pub struct HilbContext {
    pub m: u32,
    pub n: usize,
    pub surface: SurfaceData,
    pub space: FockSpace,
    pub basis: Vec<WeightedPartition>,
    pub gram: Vec<Vec<RationalFunction>>,
    pub gram_inv: Vec<Vec<RationalFunction>>,
}

impl HilbContext {
    pub fn new(m: u32, n: usize) -> Self {
        let surface = SurfaceData::new(n);
        let space = FockSpace::over_surface(&surface);
        let basis = combinat::enumerate_weighted(m, n + 1);
        let gram = space.gram_matrix(m);
        let gram_inv = invert_block_diagonal(&gram, &shape_blocks(&basis));
        HilbContext { m, n, surface, space, basis, gram, gram_inv }
    }

    /// Index of a basis element.
    pub fn index_of(&self, mu: &WeightedPartition) -> Option<usize> {
        self.basis.iter().position(|b| b == mu)
    }

    /// `z`-factors of the basis, in basis order.
    pub fn zfactor(&self, i: usize) -> BigRat {
        self.basis[i].zfactor()
    }
}

/// Group basis indices by the underlying (unlabelled) partition shape; the
/// Gram matrix is block diagonal over these groups because monomial vectors
/// of different shapes are orthogonal.
fn shape_blocks(basis: &[WeightedPartition]) -> Vec<Vec<usize>> {
    let mut blocks: Vec<(Vec<u32>, Vec<usize>)> = vec![];
    for (i, mu) in basis.iter().enumerate() {
        let shape: Vec<u32> = mu.pairs().iter().map(|&(p, _)| p).collect();
        match blocks.iter_mut().find(|(s, _)| *s == shape) {
            Some((_, idx)) => idx.push(i),
            None => blocks.push((shape, vec![i])),
        }
    }
    blocks.into_iter().map(|(_, idx)| idx).collect()
}

/// Invert a matrix known to be block diagonal over the given index groups.
fn invert_block_diagonal(
    a: &[Vec<RationalFunction>],
    blocks: &[Vec<usize>],
) -> Vec<Vec<RationalFunction>> {
    let n = a.len();
    let mut out = vec![vec![RationalFunction::zero(); n]; n];
    for idx in blocks {
        let sub: Vec<Vec<RationalFunction>> = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| a[i][j].clone()).collect())
            .collect();
        let inv = linalg::invert_rf(&sub).expect("Gram block must be invertible");
        for (bi, &i) in idx.iter().enumerate() {
            for (bj, &j) in idx.iter().enumerate() {
                out[i][j] = inv[bi][bj].clone();
            }
        }
    }
    out
}
