//! Dense exact linear algebra: Gaussian elimination over the rationals and
//! over rational-function fields. Matrices are `Vec<Vec<_>>` in row-major
//! order; sizes here are small (tens of rows), so no pivoting heuristics
//! beyond "first nonzero" are needed.

use crate::ratfunc::RationalFunction;
use crate::BigRat;
use num::Zero;

/// Solve `A x = b` over `BigRat`. Returns `None` if `A` is singular.
pub fn solve_rat(a: &[Vec<BigRat>], b: &[BigRat]) -> Option<Vec<BigRat>> {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n) && b.len() == n);
    let mut m: Vec<Vec<BigRat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| row.iter().chain(std::iter::once(rhs)).cloned().collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let sub = &m[col][c] * &f;
                    m[r][c] = &m[r][c] - &sub;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Invert a square matrix over `BigRat`. Returns `None` if singular.
pub fn invert_rat(a: &[Vec<BigRat>]) -> Option<Vec<Vec<BigRat>>> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<BigRat> = (0..n)
            .map(|i| if i == j { BigRat::from_integer(1.into()) } else { BigRat::zero() })
            .collect();
        cols.push(solve_rat(a, &e)?);
    }
    // cols[j] is the j-th column of the inverse.
    Some((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

/// Solve `A x = b` over the rational-function field. Returns `None` if `A`
/// is singular.
pub fn solve_rf(a: &[Vec<RationalFunction>], b: &[RationalFunction]) -> Option<Vec<RationalFunction>> {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n) && b.len() == n);
    let mut m: Vec<Vec<RationalFunction>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| row.iter().chain(std::iter::once(rhs)).cloned().collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].inv();
        for x in m[col].iter_mut() {
            *x = x.mul(&inv);
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let sub = m[col][c].mul(&f);
                    m[r][c] = m[r][c].sub(&sub);
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Invert a square matrix over the rational-function field.
pub fn invert_rf(a: &[Vec<RationalFunction>]) -> Option<Vec<Vec<RationalFunction>>> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<RationalFunction> = (0..n)
            .map(|i| if i == j { RationalFunction::one() } else { RationalFunction::zero() })
            .collect();
        cols.push(solve_rf(a, &e)?);
    }
    Some((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

/// Matrix product over the rational-function field.
pub fn matmul_rf(a: &[Vec<RationalFunction>], b: &[Vec<RationalFunction>]) -> Vec<Vec<RationalFunction>> {
    let (n, k) = (a.len(), b.len());
    assert!(a.iter().all(|r| r.len() == k));
    let m = b.first().map_or(0, |r| r.len());
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = RationalFunction::zero();
                    for l in 0..k {
                        if !a[i][l].is_zero() && !b[l][j].is_zero() {
                            acc = acc.add(&a[i][l].mul(&b[l][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}
