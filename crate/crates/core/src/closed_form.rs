//! Closed-form lower-Hessenberg inverse and determinant.
//!
//! For a valid parameter set the inverse is lower Hessenberg with explicit
//! entries (1-based indices, helpers c, d, f, g from
//! [`BrownianParams::helper_seqs`]):
//!
//! * superdiagonal: `α_{i,i+1} = −1/c_i`;
//! * zero for `j − i ≥ 2`;
//! * subdiagonal block, `i − j ≥ 1`:
//!   `α_{ij} = (−1)^{i+j} d_{j−1} g_i (∏_{ν=j+1}^{i−1} k_ν f_ν) / (∏_{ν=j−1}^{i} c_ν)`
//!   with the empty product equal to 1 when `i = j + 1`;
//! * diagonal (A1): `α_11 = k_2/(k_1 c_1)`, interior
//!   `α_ii = (k_{i+1} b_{i−1} − k_{i−1} a_{i−1})/(c_{i−1} c_i)`,
//!   `α_nn = b_{n−1}/(c_{n−1} c_n)`;
//! * diagonal (A2): `α_11 = 1/c_1`, interior
//!   `α_ii = (k_{i−1} b_{i−1} − k_{i+1} a_{i−1})/(c_{i−1} c_i)`,
//!   `α_nn = k_{n−1} b_{n−1}/(k_n c_{n−1} c_n)`.
//!
//! Determinants: `det(A1) = k_1 ∏_{i=1}^n c_i` and `det(A2) = k_n ∏ c_i`
//! (recall `c_n = b_n`). Both are polynomial identities in the parameters, so
//! [`determinant`] needs no validity precondition and returns exactly zero on
//! singular inputs.
//!
//! [`inverse`] walks each subdiagonal column with a running product, so the
//! whole matrix costs O(n²) and every division is by a `c` value — valid
//! parameters can never hit a division hazard here, even when `f` or `g`
//! entries vanish.

use crate::model::{BrownianParams, DenseMatrix, ValidationReport, Variant};
use crate::scalar::Scalar;
use thiserror::Error;

/// The input fails [`BrownianParams::validate`]; the report lists why.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("SingularInput: {}", .0.reasons())]
pub struct SingularInput(pub ValidationReport);

fn check_valid<S: Scalar>(p: &BrownianParams<S>) -> Result<(), SingularInput> {
    let report = p.validate();
    if report.is_valid() {
        Ok(())
    } else {
        Err(SingularInput(report))
    }
}

/// Assembles the full inverse in O(n²) scalar operations.
pub fn inverse<S: Scalar>(p: &BrownianParams<S>) -> Result<DenseMatrix<S>, SingularInput> {
    check_valid(p)?;
    let n = p.order();
    let k = |i: usize| p.k()[i - 1].clone();
    let a = |i: usize| p.a()[i - 1].clone();
    let b = |i: usize| p.b()[i - 1].clone();

    if n == 1 {
        let mut m = DenseMatrix::zeros(1);
        m[(0, 0)] = S::one() / (k(1) * b(1));
        return Ok(m);
    }

    let h = p.helper_seqs();
    let c = |i: usize| h.c(i).clone();
    let f = |i: usize| h.f(i).clone();
    let g = |i: usize| h.g(i).clone();
    let mut m = DenseMatrix::zeros(n);

    // Superdiagonal.
    for i in 1..=n - 1 {
        m[(i - 1, i)] = -(S::one() / c(i));
    }

    // Diagonal.
    match p.variant() {
        Variant::A1 => {
            m[(0, 0)] = k(2) / (k(1) * c(1));
            m[(n - 1, n - 1)] = b(n - 1) / (c(n - 1) * c(n));
        }
        Variant::A2 => {
            m[(0, 0)] = S::one() / c(1);
            m[(n - 1, n - 1)] = k(n - 1) * b(n - 1) / (k(n) * c(n - 1) * c(n));
        }
    }
    for i in 2..=n - 1 {
        let numer = match p.variant() {
            Variant::A1 => k(i + 1) * b(i - 1) - k(i - 1) * a(i - 1),
            Variant::A2 => k(i - 1) * b(i - 1) - k(i + 1) * a(i - 1),
        };
        m[(i - 1, i - 1)] = numer / (c(i - 1) * c(i));
    }

    // Subdiagonal block, one column at a time. The magnitude of the entry at
    // (i, j) is g_i · prod, where prod starts at d_{j−1}/(c_{j−1} c_j c_{j+1})
    // and each step down the column multiplies by k_i f_i / c_{i+1}.
    for j in 1..=n - 1 {
        let mut prod = h.d(j - 1).clone() / (c(j - 1) * c(j) * c(j + 1));
        let mut negative = true; // (−1)^{i+j} at i = j + 1
        for i in j + 1..=n {
            let magnitude = g(i) * prod.clone();
            m[(i - 1, j - 1)] = if negative { -magnitude } else { magnitude };
            if i < n {
                prod = prod * k(i) * f(i) / c(i + 1);
                negative = !negative;
            }
        }
    }

    Ok(m)
}

/// Evaluates a single inverse entry at 0-based (row, col) straight from the
/// entry formulas. O(n) worst case per entry; [`inverse`] is the bulk path.
pub fn inverse_entry<S: Scalar>(
    p: &BrownianParams<S>,
    row: usize,
    col: usize,
) -> Result<S, SingularInput> {
    check_valid(p)?;
    let n = p.order();
    assert!(row < n && col < n, "entry ({row}, {col}) outside order {n}");
    let k = |i: usize| p.k()[i - 1].clone();
    let a = |i: usize| p.a()[i - 1].clone();
    let b = |i: usize| p.b()[i - 1].clone();

    if n == 1 {
        return Ok(S::one() / (k(1) * b(1)));
    }

    let h = p.helper_seqs();
    let c = |i: usize| h.c(i).clone();
    // 1-based math indices.
    let (i, j) = (row + 1, col + 1);

    let value = if j >= i + 2 {
        S::zero()
    } else if j == i + 1 {
        -(S::one() / c(i))
    } else if i == j {
        match (p.variant(), i) {
            (Variant::A1, 1) => k(2) / (k(1) * c(1)),
            (Variant::A1, i) if i == n => b(n - 1) / (c(n - 1) * c(n)),
            (Variant::A1, i) => (k(i + 1) * b(i - 1) - k(i - 1) * a(i - 1)) / (c(i - 1) * c(i)),
            (Variant::A2, 1) => S::one() / c(1),
            (Variant::A2, i) if i == n => k(n - 1) * b(n - 1) / (k(n) * c(n - 1) * c(n)),
            (Variant::A2, i) => (k(i - 1) * b(i - 1) - k(i + 1) * a(i - 1)) / (c(i - 1) * c(i)),
        }
    } else {
        // i − j ≥ 1: sign · d_{j−1} g_i ∏ k_ν f_ν / ∏ c_ν.
        let mut numer = h.d(j - 1).clone() * h.g(i).clone();
        for nu in j + 1..=i - 1 {
            numer = numer * k(nu) * h.f(nu).clone();
        }
        let mut denom = S::one();
        for nu in j - 1..=i {
            denom = denom * c(nu);
        }
        let magnitude = numer / denom;
        if (i + j) % 2 == 0 {
            magnitude
        } else {
            -magnitude
        }
    };
    Ok(value)
}

/// `det(A1) = k_1 ∏_{i=1}^n c_i`, `det(A2) = k_n ∏_{i=1}^n c_i`.
pub fn determinant<S: Scalar>(p: &BrownianParams<S>) -> S {
    let n = p.order();
    let h = p.helper_seqs();
    let mut det = match p.variant() {
        Variant::A1 => p.k()[0].clone(),
        Variant::A2 => p.k()[n - 1].clone(),
    };
    for i in 1..=n {
        det = det * h.c(i).clone();
    }
    det
}
