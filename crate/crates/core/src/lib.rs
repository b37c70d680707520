//! Brownian-type test matrices: two dense families with closed-form
//! lower-Hessenberg inverses and determinants.
//!
//! Both families are Hadamard products of a one-parameter "Brownian" factor
//! with an upper/lower column-scaling factor. The min-variant takes entry
//! `(i, j)` equal to `k_i b_j` on and above the diagonal and `k_j a_j`
//! below; the max-variant takes `k_j b_j` on and above and `k_i a_j` below.
//! Whenever `k_1` (min-variant) or `k_n` (max-variant) and all helper values
//! `c_i` are nonzero, the matrix is invertible with an explicit inverse that
//! vanishes above the first superdiagonal.
//!
//! The crate provides:
//!
//! * [`model`] — parameter sets, validation, matrix assembly, helper
//!   sequences `c`, `d`, `f`, `g`, and seeded random instances;
//! * [`closed_form`] — the explicit inverse (whole matrix or single entry)
//!   and determinant;
//! * [`recursive`] — O(n²) assembly of the same inverse by row- or
//!   column-recurrences, with exact operation counting;
//! * [`elimination`] — a four-stage elimination that reproduces the inverse
//!   and determinant constructively, with a checkable audit trail;
//! * [`oracle`] — an independent dense Gaussian-elimination baseline;
//! * [`io`] — JSON parameter files, Matrix Market / CSV matrices, trace
//!   dumps;
//! * [`scalar`] — the exact rational and `f64` scalar fields everything is
//!   generic over.
//!
//! The `brownian` binary exposes generation, inversion, determinants,
//! property verification, and benchmarking on top of these modules.

pub mod closed_form;
pub mod elimination;
pub mod io;
pub mod model;
pub mod oracle;
pub mod recursive;
pub mod scalar;

pub use closed_form::SingularInput;
pub use elimination::{eliminate, validate_stage, EliminationError, EliminationTrace};
pub use model::{
    random_params, well_conditioned_params, BrownianParams, DenseMatrix, ModelError, Variant,
};
pub use oracle::{gauss_det, gauss_inverse, residual, OracleError};
pub use recursive::{recursive_inverse, OpCounter, RecurrenceForm, RecursiveError};
pub use scalar::{FieldTag, Rational, Scalar};
