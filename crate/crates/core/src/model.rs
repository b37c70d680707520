//! Parameter sets, the two matrix variants, helper sequences, and validation.
//!
//! A parameter set holds three sequences `k` (length n), `a` (length n−1) and
//! `b` (length n). The two variants are Hadamard products of a min/max factor
//! with the same bidiagonal-profile factor G:
//!
//! * `A1[i][j] = k_min(i,j) · G[i][j]` — above/on the diagonal `k_i b_j`,
//!   below it `k_j a_j` (1-based indices);
//! * `A2[i][j] = k_max(i,j) · G[i][j]` — above/on the diagonal `k_j b_j`,
//!   below it `k_i a_j`.
//!
//! `a_n` never appears in any entry (G uses `a_j` only for `j < i ≤ n`), which
//! is why `a` has length n−1.
//!
//! Throughout the crate the mathematical sequences are 1-based; storage is
//! 0-based. The fixed convention is that math index `i` lives at storage index
//! `i − 1`, and the helper-sequence accessors take math indices directly.

use crate::scalar::{Rational, Scalar};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Which of the two Brownian-type matrices a parameter set describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    A1,
    A2,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::A1 => write!(f, "A1"),
            Variant::A2 => write!(f, "A2"),
        }
    }
}

impl FromStr for Variant {
    type Err = ModelError;
    fn from_str(s: &str) -> Result<Self, ModelError> {
        match s.to_ascii_lowercase().as_str() {
            "a1" => Ok(Variant::A1),
            "a2" => Ok(Variant::A2),
            other => Err(ModelError::UnknownVariant(other.to_string())),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("LengthMismatch: array {array:?} has length {found}, expected {expected}")]
    LengthMismatch {
        array: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("InvalidOrder: order must be at least 1")]
    InvalidOrder,
    #[error("UnknownVariant: {0:?} (expected \"a1\" or \"a2\")")]
    UnknownVariant(String),
    #[error("DimensionMismatch: {0}")]
    DimensionMismatch(String),
    #[error("GenerationFailed: no valid parameter set within {0} draws")]
    GenerationFailed(usize),
}

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix<S> {
    n: usize,
    data: Vec<S>,
}

impl<S: Scalar> DenseMatrix<S> {
    pub fn filled(n: usize, value: S) -> Self {
        DenseMatrix {
            n,
            data: vec![value; n * n],
        }
    }

    pub fn zeros(n: usize) -> Self {
        Self::filled(n, S::zero())
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self, ModelError> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(ModelError::DimensionMismatch(format!(
                    "row {i} has {} entries in a {n}x{n} matrix",
                    row.len()
                )));
            }
        }
        Ok(DenseMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Order of the (square) matrix.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[S] {
        &self.data
    }

    pub fn get(&self, row: usize, col: usize) -> &S {
        &self.data[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: S) {
        self.data[row * self.n + col] = value;
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> DenseMatrix<T> {
        DenseMatrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn to_f64(&self) -> DenseMatrix<f64> {
        self.map(|x| x.to_f64())
    }

    /// Entrywise product; both operands must have the same order.
    pub fn hadamard(&self, other: &Self) -> Result<Self, ModelError> {
        if self.n != other.n {
            return Err(ModelError::DimensionMismatch(format!(
                "hadamard of order {} with order {}",
                self.n, other.n
            )));
        }
        Ok(DenseMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(x, y)| x.clone() * y.clone())
                .collect(),
        })
    }

    /// Plain O(n³) matrix product.
    pub fn mul(&self, other: &Self) -> Result<Self, ModelError> {
        if self.n != other.n {
            return Err(ModelError::DimensionMismatch(format!(
                "product of order {} with order {}",
                self.n, other.n
            )));
        }
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let lhs = self.get(i, k);
                if lhs.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let add = lhs.clone() * other.get(k, j).clone();
                    out[(i, j)] = out.get(i, j).clone() + add;
                }
            }
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                if i == j {
                    self.get(i, j).is_one()
                } else {
                    self.get(i, j).is_zero()
                }
            })
        })
    }

    /// Zero everywhere strictly above the first superdiagonal.
    pub fn is_lower_hessenberg(&self) -> bool {
        self.positions(|i, j| j > i + 1)
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.positions(|i, j| j > i)
    }

    /// Nonzero entries confined to the diagonal and the first subdiagonal.
    pub fn is_lower_bidiagonal(&self) -> bool {
        self.positions(|i, j| j > i || i > j + 1)
    }

    /// Nonzero entries confined to the diagonal and the first superdiagonal.
    pub fn is_upper_bidiagonal(&self) -> bool {
        self.positions(|i, j| i > j || j > i + 1)
    }

    pub fn is_tridiagonal(&self) -> bool {
        self.positions(|i, j| i.abs_diff(j) > 1)
    }

    pub fn is_diagonal(&self) -> bool {
        self.positions(|i, j| i != j)
    }

    /// True when every position selected by `outside` is zero.
    fn positions(&self, outside: impl Fn(usize, usize) -> bool) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| !outside(i, j) || self.get(i, j).is_zero()))
    }
}

impl<S: Scalar> std::ops::Index<(usize, usize)> for DenseMatrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        self.get(i, j)
    }
}

impl<S: Scalar> std::ops::IndexMut<(usize, usize)> for DenseMatrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.n + j]
    }
}

/// Validated parameter set for one variant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrownianParams<S: Scalar> {
    variant: Variant,
    k: Vec<S>,
    a: Vec<S>,
    b: Vec<S>,
}

impl<S: Scalar> BrownianParams<S> {
    /// Checks only lengths (`k`: n ≥ 1, `a`: n−1, `b`: n); value-level
    /// nonsingularity is [`BrownianParams::validate`]'s job.
    pub fn new(variant: Variant, k: Vec<S>, a: Vec<S>, b: Vec<S>) -> Result<Self, ModelError> {
        let n = k.len();
        if n == 0 {
            return Err(ModelError::InvalidOrder);
        }
        if a.len() != n - 1 {
            return Err(ModelError::LengthMismatch {
                array: "a",
                expected: n - 1,
                found: a.len(),
            });
        }
        if b.len() != n {
            return Err(ModelError::LengthMismatch {
                array: "b",
                expected: n,
                found: b.len(),
            });
        }
        Ok(BrownianParams { variant, k, a, b })
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn order(&self) -> usize {
        self.k.len()
    }

    pub fn k(&self) -> &[S] {
        &self.k
    }

    pub fn a(&self) -> &[S] {
        &self.a
    }

    pub fn b(&self) -> &[S] {
        &self.b
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> BrownianParams<T> {
        BrownianParams {
            variant: self.variant,
            k: self.k.iter().map(&f).collect(),
            a: self.a.iter().map(&f).collect(),
            b: self.b.iter().map(&f).collect(),
        }
    }

    pub fn to_f64(&self) -> BrownianParams<f64> {
        self.map(|x| x.to_f64())
    }

    /// Builds the dense matrix for this variant.
    pub fn build_matrix(&self) -> DenseMatrix<S> {
        let n = self.order();
        let mut m = DenseMatrix::zeros(n);
        // 1-based entry formulas; storage indices are (i-1, j-1).
        for i in 1..=n {
            for j in 1..=n {
                let value = match (self.variant, i <= j) {
                    (Variant::A1, true) => self.k[i - 1].clone() * self.b[j - 1].clone(),
                    (Variant::A1, false) => self.k[j - 1].clone() * self.a[j - 1].clone(),
                    (Variant::A2, true) => self.k[j - 1].clone() * self.b[j - 1].clone(),
                    (Variant::A2, false) => self.k[i - 1].clone() * self.a[j - 1].clone(),
                };
                m[(i - 1, j - 1)] = value;
            }
        }
        m
    }

    /// The Hadamard factors: the min/max factor (per variant) and the
    /// bidiagonal-profile factor G with `b_j` on/above the diagonal and `a_j`
    /// below it.
    pub fn factors(&self) -> (DenseMatrix<S>, DenseMatrix<S>) {
        let n = self.order();
        let mut kf = DenseMatrix::zeros(n);
        let mut gf = DenseMatrix::zeros(n);
        for i in 1..=n {
            for j in 1..=n {
                let idx = match self.variant {
                    Variant::A1 => i.min(j),
                    Variant::A2 => i.max(j),
                };
                kf[(i - 1, j - 1)] = self.k[idx - 1].clone();
                gf[(i - 1, j - 1)] = if i <= j {
                    self.b[j - 1].clone()
                } else {
                    self.a[j - 1].clone()
                };
            }
        }
        (kf, gf)
    }

    /// Computes the helper sequences c, d, f, g with their boundary
    /// conventions baked in. Plain (uncounted) arithmetic.
    pub fn helper_seqs(&self) -> HelperSeqs<S> {
        let n = self.order();
        let k = |i: usize| self.k[i - 1].clone();
        let a = |i: usize| self.a[i - 1].clone();
        let b = |i: usize| self.b[i - 1].clone();

        // c: indices 0..=n. c_0 = 1 and c_n = b_n by convention.
        let mut c = Vec::with_capacity(n + 1);
        c.push(S::one());
        for i in 1..n {
            let v = match self.variant {
                Variant::A1 => k(i + 1) * b(i) - k(i) * a(i),
                Variant::A2 => k(i) * b(i) - k(i + 1) * a(i),
            };
            c.push(v);
        }
        c.push(b(n));

        // d: indices 0..=n-2 (empty for n = 1). d_0 = a_1 by convention.
        let mut d = Vec::new();
        if n >= 2 {
            d.push(a(1));
            for i in 1..=n - 2 {
                let v = match self.variant {
                    Variant::A1 => k(i + 1) * a(i + 1) * b(i) - k(i) * a(i) * b(i + 1),
                    Variant::A2 => k(i) * a(i + 1) * b(i) - k(i + 1) * a(i) * b(i + 1),
                };
                d.push(v);
            }
        }

        // f: indices 2..=n-1 (empty for n <= 2).
        let mut f = Vec::new();
        for i in 2..=n.saturating_sub(1) {
            f.push(a(i) - b(i));
        }

        // g: indices 2..=n (empty for n = 1). g_n = 1 by convention.
        let mut g = Vec::new();
        if n >= 2 {
            for i in 2..n {
                let v = match self.variant {
                    Variant::A1 => k(i + 1) - k(i),
                    Variant::A2 => k(i) - k(i + 1),
                };
                g.push(v);
            }
            g.push(S::one());
        }

        HelperSeqs { n, c, d, f, g }
    }

    /// Value-level nonsingularity check: `k_1 ≠ 0` (A1) or `k_n ≠ 0` (A2),
    /// and every `c_i ≠ 0` for i = 1..n (note `c_n = b_n`).
    pub fn validate(&self) -> ValidationReport {
        let n = self.order();
        let mut violations = Vec::new();
        match self.variant {
            Variant::A1 => {
                if self.k[0].is_zero() {
                    violations.push(Violation::KFirstZero);
                }
            }
            Variant::A2 => {
                if self.k[n - 1].is_zero() {
                    violations.push(Violation::KLastZero);
                }
            }
        }
        let h = self.helper_seqs();
        for i in 1..=n {
            if h.c(i).is_zero() {
                violations.push(Violation::CZero(i));
            }
        }
        ValidationReport {
            variant: self.variant,
            violations,
        }
    }
}

/// The c, d, f, g sequences with conventional boundary values.
///
/// Accessors take the 1-based mathematical index; ranges are
/// `c`: 0..=n, `d`: 0..=n−2, `f`: 2..=n−1, `g`: 2..=n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HelperSeqs<S> {
    n: usize,
    c: Vec<S>,
    d: Vec<S>,
    f: Vec<S>,
    g: Vec<S>,
}

impl<S: Scalar> HelperSeqs<S> {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn c(&self, i: usize) -> &S {
        &self.c[i]
    }

    pub fn d(&self, i: usize) -> &S {
        &self.d[i]
    }

    pub fn f(&self, i: usize) -> &S {
        debug_assert!((2..=self.n - 1).contains(&i));
        &self.f[i - 2]
    }

    pub fn g(&self, i: usize) -> &S {
        debug_assert!((2..=self.n).contains(&i));
        &self.g[i - 2]
    }

    pub fn c_all(&self) -> &[S] {
        &self.c
    }

    pub fn d_all(&self) -> &[S] {
        &self.d
    }

    pub fn f_all(&self) -> &[S] {
        &self.f
    }

    pub fn g_all(&self) -> &[S] {
        &self.g
    }
}

/// Outcome of [`BrownianParams::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub variant: Variant,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn reasons(&self) -> String {
        self.violations
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join("; ")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    KFirstZero,
    KLastZero,
    CZero(usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::KFirstZero => write!(f, "k1 = 0"),
            Violation::KLastZero => write!(f, "kn = 0"),
            Violation::CZero(i) => write!(f, "c{i} = 0"),
        }
    }
}

/// Retry cap for rejection sampling in [`random_params`].
pub const RANDOM_PARAMS_MAX_DRAWS: usize = 1000;

/// Draws integer parameters uniformly from [−9, 9], rejecting draws that fail
/// [`BrownianParams::validate`]. Deterministic for a fixed seed.
pub fn random_params(
    variant: Variant,
    n: usize,
    seed: u64,
) -> Result<BrownianParams<Rational>, ModelError> {
    if n == 0 {
        return Err(ModelError::InvalidOrder);
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_PARAMS_MAX_DRAWS {
        let mut draw = |len: usize| -> Vec<Rational> {
            (0..len)
                .map(|_| Rational::from_int(rng.random_range(-9..=9)))
                .collect()
        };
        let k = draw(n);
        let a = draw(n - 1);
        let b = draw(n);
        let params = BrownianParams::new(variant, k, a, b).expect("lengths are consistent");
        if params.validate().is_valid() {
            return Ok(params);
        }
    }
    Err(ModelError::GenerationFailed(RANDOM_PARAMS_MAX_DRAWS))
}

/// Deterministic well-conditioned family for float-accuracy and timing work:
/// `k = (1, …, n)` for the min-variant (mirrored for the max-variant),
/// `a ≡ 1/2`, `b ≡ 1`. Every helper value is nonzero (`c_i = (i+2)/2` for
/// the min-variant), the inverse's entries decay away from the diagonal, and
/// every inversion path — closed, both recurrences, elimination — applies
/// without breakdown at any order.
pub fn well_conditioned_params<S: Scalar>(variant: Variant, n: usize) -> BrownianParams<S> {
    assert!(n >= 1, "order must be positive");
    let at = |i: usize| match variant {
        Variant::A1 => i as i64,
        Variant::A2 => (n + 1 - i) as i64,
    };
    let half = S::one() / S::from_int(2);
    let k: Vec<S> = (1..=n).map(|i| S::from_int(at(i))).collect();
    let a = vec![half; n - 1];
    let b = vec![S::one(); n];
    BrownianParams::new(variant, k, a, b).expect("lengths are consistent")
}
