//! Independent reference implementations: Gaussian-elimination inverse and
//! determinant, plus the float residual metric.
//!
//! These deliberately share no code with the closed-form or recursive paths —
//! they exist so the fast paths can be checked against something that knows
//! nothing about the structure of the inputs. The elimination is plain O(n³)
//! row reduction on an augmented matrix, pivoting on the first nonzero entry
//! in each column (designed for exact fields; the float instantiation serves
//! as a timing baseline, not as a numerically hardened solver).

use crate::model::DenseMatrix;
use crate::scalar::Scalar;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("SingularMatrix: no nonzero pivot in column {column} (1-based)")]
    Singular { column: usize },
    #[error("DimensionMismatch: residual of order {a} against order {x}")]
    DimensionMismatch { a: usize, x: usize },
}

/// Inverts by row-reducing `[A | I]` to `[I | A⁻¹]`.
pub fn gauss_inverse<S: Scalar>(a: &DenseMatrix<S>) -> Result<DenseMatrix<S>, OracleError> {
    let n = a.order();
    // Augmented n x 2n matrix, row-major.
    let width = 2 * n;
    let mut aug: Vec<S> = Vec::with_capacity(n * width);
    for i in 0..n {
        for j in 0..n {
            aug.push(a.get(i, j).clone());
        }
        for j in 0..n {
            aug.push(if i == j { S::one() } else { S::zero() });
        }
    }
    let at = |aug: &Vec<S>, r: usize, c: usize| aug[r * width + c].clone();

    // Forward elimination with first-nonzero pivoting.
    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !at(&aug, r, col).is_zero())
            .ok_or(OracleError::Singular { column: col + 1 })?;
        if pivot_row != col {
            for c in 0..width {
                aug.swap(col * width + c, pivot_row * width + c);
            }
        }
        let pivot = at(&aug, col, col);
        for r in col + 1..n {
            let factor = at(&aug, r, col).clone() / pivot.clone();
            if factor.is_zero() {
                continue;
            }
            for c in col..width {
                let sub = factor.clone() * at(&aug, col, c);
                aug[r * width + c] = at(&aug, r, c) - sub;
            }
        }
    }

    // Back substitution.
    for col in (0..n).rev() {
        let pivot = at(&aug, col, col);
        for c in col..width {
            aug[col * width + c] = at(&aug, col, c) / pivot.clone();
        }
        for r in 0..col {
            let factor = at(&aug, r, col);
            if factor.is_zero() {
                continue;
            }
            for c in col..width {
                let sub = factor.clone() * at(&aug, col, c);
                aug[r * width + c] = at(&aug, r, c) - sub;
            }
        }
    }

    let mut inv = DenseMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            inv[(i, j)] = at(&aug, i, n + j);
        }
    }
    Ok(inv)
}

/// Determinant by forward elimination with row-swap sign tracking.
/// Singular inputs return exactly zero.
pub fn gauss_det<S: Scalar>(a: &DenseMatrix<S>) -> S {
    let n = a.order();
    let mut m = a.clone();
    let mut negate = false;
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !m.get(r, col).is_zero()) {
            Some(r) => r,
            None => return S::zero(),
        };
        if pivot_row != col {
            for c in 0..n {
                let tmp = m.get(col, c).clone();
                m[(col, c)] = m.get(pivot_row, c).clone();
                m[(pivot_row, c)] = tmp;
            }
            negate = !negate;
        }
        let pivot = m.get(col, col).clone();
        for r in col + 1..n {
            let factor = m.get(r, col).clone() / pivot.clone();
            if factor.is_zero() {
                continue;
            }
            for c in col..n {
                let sub = factor.clone() * m.get(col, c).clone();
                m[(r, c)] = m.get(r, c).clone() - sub;
            }
        }
    }
    let mut det = S::one();
    for i in 0..n {
        det = det * m.get(i, i).clone();
    }
    if negate {
        -det
    } else {
        det
    }
}

/// Max-abs entry of `A·X − I`: the inversion residual in the float field.
pub fn residual(a: &DenseMatrix<f64>, x: &DenseMatrix<f64>) -> Result<f64, OracleError> {
    let n = a.order();
    if n != x.order() {
        return Err(OracleError::DimensionMismatch {
            a: n,
            x: x.order(),
        });
    }
    let mut worst = 0.0f64;
    // Row-by-row product, ikj order to stay cache-friendly at large n.
    let mut row = vec![0.0f64; n];
    for i in 0..n {
        row.iter_mut().for_each(|v| *v = 0.0);
        for k in 0..n {
            let aik = *a.get(i, k);
            if aik == 0.0 {
                continue;
            }
            let xrow = &x.as_slice()[k * n..(k + 1) * n];
            for (j, xv) in xrow.iter().enumerate() {
                row[j] += aik * xv;
            }
        }
        for (j, v) in row.iter().enumerate() {
            let target = if i == j { 1.0 } else { 0.0 };
            let err = (v - target).abs();
            if err > worst {
                worst = err;
            }
        }
    }
    Ok(worst)
}
