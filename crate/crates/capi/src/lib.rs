//! C ABI for the Brownian-type matrix library.
//!
//! The interface works through two opaque handles — a parameter set and a
//! matrix — plus status codes. Every function returns a [`BrownianStatus`];
//! results come back through out-pointers. Strings returned by the library
//! are NUL-terminated, heap-allocated, and must be released with
//! [`brownian_string_free`]; handles with their respective `_free`
//! functions. All functions tolerate NULL inputs by returning
//! `NullArgument` instead of crashing, and internal panics are caught and
//! reported as `InternalError`.
//!
//! The exact arithmetic field (arbitrary-precision rationals) is used for
//! every computation; `_f64` accessors convert on the way out.

use brownian_matrices::closed_form;
use brownian_matrices::elimination::{self, EliminationError};
use brownian_matrices::io;
use brownian_matrices::model::{random_params, BrownianParams, DenseMatrix, Variant};
use brownian_matrices::oracle;
use brownian_matrices::recursive::{recursive_inverse, RecurrenceForm, RecursiveError};
use brownian_matrices::scalar::Rational;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status code returned by every API function.
#[repr(C)]
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum BrownianStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was NULL.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// JSON or number parsing failed.
    ParseError = 3,
    /// The parameters are structurally invalid (lengths, order, variant).
    InvalidParams = 4,
    /// The parameters describe a singular matrix.
    Singular = 5,
    /// A recurrence or elimination divisor is zero for this instance.
    Breakdown = 6,
    /// A row, column, or enum value is out of range.
    OutOfRange = 7,
    /// An unexpected internal failure (caught panic).
    InternalError = 8,
}

/// Matrix family selector.
#[repr(C)]
#[derive(Copy, Clone, PartialEq, Eq)]
pub enum BrownianVariant {
    A1 = 1,
    A2 = 2,
}

/// Inversion algorithm selector.
#[repr(C)]
#[derive(Copy, Clone, PartialEq, Eq)]
pub enum BrownianMethod {
    /// Entry formulas, O(n²).
    Closed = 0,
    /// Row-wise recurrence, O(n²), may break down.
    RecursiveI = 1,
    /// Column-wise recurrence, O(n²), may break down.
    RecursiveJ = 2,
    /// Four-stage elementary row elimination, may break down.
    Elimination = 3,
    /// Dense Gauss–Jordan reference, O(n³).
    Oracle = 4,
}

/// Operation counts of a recursive inversion.
#[repr(C)]
#[derive(Copy, Clone, Default)]
pub struct BrownianOpCounts {
    pub mul_div: u64,
    pub add_sub: u64,
}

/// Opaque parameter-set handle (create via `brownian_params_from_json` or
/// `brownian_params_random`, release via `brownian_params_free`).
pub struct BrownianParamsHandle {
    inner: BrownianParams<Rational>,
}

/// Opaque square-matrix handle (release via `brownian_matrix_free`).
pub struct BrownianMatrixHandle {
    inner: DenseMatrix<Rational>,
}

fn variant_of(v: BrownianVariant) -> Variant {
    match v {
        BrownianVariant::A1 => Variant::A1,
        BrownianVariant::A2 => Variant::A2,
    }
}

fn status_of_recursive(e: &RecursiveError) -> BrownianStatus {
    match e {
        RecursiveError::Singular(_) => BrownianStatus::Singular,
        RecursiveError::Breakdown(_) => BrownianStatus::Breakdown,
        RecursiveError::Model(_) => BrownianStatus::InvalidParams,
    }
}

fn status_of_elimination(e: &EliminationError) -> BrownianStatus {
    match e {
        EliminationError::Singular(_) => BrownianStatus::Singular,
        EliminationError::Breakdown(_) => BrownianStatus::Breakdown,
    }
}

/// Runs `f`, converting panics into `InternalError`.
fn guarded(f: impl FnOnce() -> BrownianStatus) -> BrownianStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(BrownianStatus::InternalError)
}

/// Writes `value` through `out`, returning `Ok`.
unsafe fn give<T>(out: *mut *mut T, value: T) -> BrownianStatus {
    *out = Box::into_raw(Box::new(value));
    BrownianStatus::Ok
}

unsafe fn give_string(out: *mut *mut c_char, s: String) -> BrownianStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            BrownianStatus::Ok
        }
        Err(_) => BrownianStatus::InternalError,
    }
}

/// Parses a parameter set from a JSON document.
///
/// Expected shape: `{"variant": "A1", "k": [...], "a": [...], "b": [...]}`
/// where array entries are integers or strings ("3/4", "0.25", "1e3").
/// `a` must have one entry fewer than `k` and `b`.
///
/// # Safety
/// `json` must point to a NUL-terminated string; `out` must be a valid
/// pointer. On `Ok`, `*out` owns a new handle.
#[no_mangle]
pub unsafe extern "C" fn brownian_params_from_json(
    json: *const c_char,
    out: *mut *mut BrownianParamsHandle,
) -> BrownianStatus {
    if json.is_null() || out.is_null() {
        return BrownianStatus::NullArgument;
    }
    let text = match CStr::from_ptr(json).to_str() {
        Ok(t) => t,
        Err(_) => return BrownianStatus::InvalidUtf8,
    };
    guarded(|| match io::parse_params(text) {
        Ok(inner) => give(out, BrownianParamsHandle { inner }),
        Err(io::IoError::Model(_)) => BrownianStatus::InvalidParams,
        Err(_) => BrownianStatus::ParseError,
    })
}

/// Draws a seeded random valid parameter set of order `n`.
///
/// # Safety
/// `out` must be a valid pointer. On `Ok`, `*out` owns a new handle.
#[no_mangle]
pub unsafe extern "C" fn brownian_params_random(
    variant: BrownianVariant,
    n: usize,
    seed: u64,
    out: *mut *mut BrownianParamsHandle,
) -> BrownianStatus {
    if out.is_null() {
        return BrownianStatus::NullArgument;
    }
    guarded(|| match random_params(variant_of(variant), n, seed) {
        Ok(inner) => give(out, BrownianParamsHandle { inner }),
        Err(_) => BrownianStatus::InvalidParams,
    })
}

/// Serializes the parameter set as pretty-printed JSON.
///
/// # Safety
/// `params` must be a live handle from this library and `out` a valid
/// pointer. On `Ok`, `*out` must be released with `brownian_string_free`.
#[no_mangle]
pub unsafe extern "C" fn brownian_params_to_json(
    params: *const BrownianParamsHandle,
    out: *mut *mut c_char,
) -> BrownianStatus {
    if params.is_null() || out.is_null() {
        return BrownianStatus::NullArgument;
    }
    let p = &(*params).inner;
    guarded(|| give_string(out, io::params_to_json(p)))
}

/// Returns the matrix order, or 0 if `params` is NULL.
///
/// # Safety
/// `params` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn brownian_params_order(params: *const BrownianParamsHandle) -> usize {
    if params.is_null() {
        0
    } else {
        (*params).inner.order()
    }
}

/// Checks invertibility: `Ok` for valid parameters, `Singular` otherwise.
///
/// # Safety
/// `params` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn brownian_params_validate(
    params: *const BrownianParamsHandle,
) -> BrownianStatus {
    if params.is_null() {
        return BrownianStatus::NullArgument;
    }
    let p = &(*params).inner;
    guarded(|| {
        if p.validate().is_valid() {
            BrownianStatus::Ok
        } else {
            BrownianStatus::Singular
        }
    })
}

/// Releases a parameter handle. NULL is ignored.
///
/// # Safety
/// `params` must be NULL or an unreleased handle from this library.
#[no_mangle]
pub unsafe extern "C" fn brownian_params_free(params: *mut BrownianParamsHandle) {
    if !params.is_null() {
        drop(Box::from_raw(params));
    }
}

/// Builds the matrix the parameters describe.
///
/// # Safety
/// `params` must be a live handle and `out` a valid pointer. On `Ok`,
/// `*out` owns a new matrix handle.
#[no_mangle]
pub unsafe extern "C" fn brownian_build_matrix(
    params: *const BrownianParamsHandle,
    out: *mut *mut BrownianMatrixHandle,
) -> BrownianStatus {
    if params.is_null() || out.is_null() {
        return BrownianStatus::NullArgument;
    }
    let p = &(*params).inner;
    guarded(|| give(out, BrownianMatrixHandle { inner: p.build_matrix() }))
}

/// Inverts the matrix by the chosen method, in exact arithmetic.
///
/// Fails with `Singular` on non-invertible parameters and `Breakdown` when
/// a recursive or elimination divisor vanishes for this instance (the
/// closed form never breaks down on valid parameters).
///
/// # Safety
/// `params` must be a live handle and `out` a valid pointer. On `Ok`,
/// `*out` owns a new matrix handle.
#[no_mangle]
pub unsafe extern "C" fn brownian_inverse(
    params: *const BrownianParamsHandle,
    method: BrownianMethod,
    out: *mut *mut BrownianMatrixHandle,
) -> BrownianStatus {
    if params.is_null() || out.is_null() {
        return BrownianStatus::NullArgument;
    }
    let p = &(*params).inner;
    guarded(|| {
        let result = match method {
            BrownianMethod::Closed => {
                closed_form::inverse(p).map_err(|_| BrownianStatus::Singular)
            }
            BrownianMethod::RecursiveI | BrownianMethod::RecursiveJ => {
                let form = if method == BrownianMethod::RecursiveI {
                    RecurrenceForm::RowI
                } else {
                    RecurrenceForm::ColJ
                };
                recursive_inverse(p, form)
                    .map(|(m, _)| m)
                    .map_err(|e| status_of_recursive(&e))
            }
            BrownianMethod::Elimination => elimination::eliminate(p)
                .map(|trace| trace.stage(4).multiplier.clone())
                .map_err(|e| status_of_elimination(&e)),
            BrownianMethod::Oracle => {
                oracle::gauss_inverse(&p.build_matrix()).map_err(|_| BrownianStatus::Singular)
            }
        };
        match result {
            Ok(m) => give(out, BrownianMatrixHandle { inner: m }),
            Err(status) => status,
        }
    })
}

/// Reports the operation counts of a recursive inversion without keeping
/// the result. `method` must be `RecursiveI` or `RecursiveJ`.
///
/// # Safety
/// `params` must be a live handle and `counts` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn brownian_op_counts(
    params: *const BrownianParamsHandle,
    method: BrownianMethod,
    counts: *mut BrownianOpCounts,
) -> BrownianStatus {
    if params.is_null() || counts.is_null() {
        return BrownianStatus::NullArgument;
    }
    let form = match method {
        BrownianMethod::RecursiveI => RecurrenceForm::RowI,
        BrownianMethod::RecursiveJ => RecurrenceForm::ColJ,
        _ => return BrownianStatus::OutOfRange,
    };
    let p = &(*params).inner;
    guarded(|| match recursive_inverse(p, form) {
        Ok((_, ops)) => {
            *counts = BrownianOpCounts {
                mul_div: ops.mul_div,
                add_sub: ops.add_sub,
            };
            BrownianStatus::Ok
        }
        Err(e) => status_of_recursive(&e),
    })
}

/// Writes the exact determinant as a decimal string ("0", "7", "-3/4").
///
/// Never fails on singular input: the determinant of a singular instance
/// is exactly "0".
///
/// # Safety
/// `params` must be a live handle and `out` a valid pointer. On `Ok`,
/// `*out` must be released with `brownian_string_free`.
#[no_mangle]
pub unsafe extern "C" fn brownian_determinant_string(
    params: *const BrownianParamsHandle,
    out: *mut *mut c_char,
) -> BrownianStatus {
    if params.is_null() || out.is_null() {
        return BrownianStatus::NullArgument;
    }
    let p = &(*params).inner;
    guarded(|| give_string(out, closed_form::determinant(p).to_string()))
}

/// Writes the determinant rounded to the nearest double.
///
/// # Safety
/// `params` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn brownian_determinant_f64(
    params: *const BrownianParamsHandle,
    out: *mut f64,
) -> BrownianStatus {
    if params.is_null() || out.is_null() {
        return BrownianStatus::NullArgument;
    }
    let p = &(*params).inner;
    guarded(|| {
        *out = brownian_matrices::scalar::Scalar::to_f64(&closed_form::determinant(p));
        BrownianStatus::Ok
    })
}

/// Returns the matrix order, or 0 if `matrix` is NULL.
///
/// # Safety
/// `matrix` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn brownian_matrix_order(matrix: *const BrownianMatrixHandle) -> usize {
    if matrix.is_null() {
        0
    } else {
        (*matrix).inner.order()
    }
}

/// Reads entry (row, col), 0-based, rounded to the nearest double.
///
/// # Safety
/// `matrix` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn brownian_matrix_get_f64(
    matrix: *const BrownianMatrixHandle,
    row: usize,
    col: usize,
    out: *mut f64,
) -> BrownianStatus {
    if matrix.is_null() || out.is_null() {
        return BrownianStatus::NullArgument;
    }
    let m = &(*matrix).inner;
    if row >= m.order() || col >= m.order() {
        return BrownianStatus::OutOfRange;
    }
    *out = brownian_matrices::scalar::Scalar::to_f64(m.get(row, col));
    BrownianStatus::Ok
}

/// Writes entry (row, col), 0-based, as an exact decimal string.
///
/// # Safety
/// `matrix` must be a live handle and `out` a valid pointer. On `Ok`,
/// `*out` must be released with `brownian_string_free`.
#[no_mangle]
pub unsafe extern "C" fn brownian_matrix_entry_string(
    matrix: *const BrownianMatrixHandle,
    row: usize,
    col: usize,
    out: *mut *mut c_char,
) -> BrownianStatus {
    if matrix.is_null() || out.is_null() {
        return BrownianStatus::NullArgument;
    }
    let m = &(*matrix).inner;
    if row >= m.order() || col >= m.order() {
        return BrownianStatus::OutOfRange;
    }
    guarded(|| give_string(out, m.get(row, col).to_string()))
}

/// Serializes the whole matrix as exact CSV (one line per row).
///
/// # Safety
/// `matrix` must be a live handle and `out` a valid pointer. On `Ok`,
/// `*out` must be released with `brownian_string_free`.
#[no_mangle]
pub unsafe extern "C" fn brownian_matrix_to_csv(
    matrix: *const BrownianMatrixHandle,
    out: *mut *mut c_char,
) -> BrownianStatus {
    if matrix.is_null() || out.is_null() {
        return BrownianStatus::NullArgument;
    }
    let m = &(*matrix).inner;
    guarded(|| give_string(out, io::matrix_to_csv(m)))
}

/// Releases a matrix handle. NULL is ignored.
///
/// # Safety
/// `matrix` must be NULL or an unreleased handle from this library.
#[no_mangle]
pub unsafe extern "C" fn brownian_matrix_free(matrix: *mut BrownianMatrixHandle) {
    if !matrix.is_null() {
        drop(Box::from_raw(matrix));
    }
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or an unreleased string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn brownian_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Returns the static name of a status code (never NULL, never freed).
#[no_mangle]
pub extern "C" fn brownian_status_name(status: BrownianStatus) -> *const c_char {
    let name: &'static CStr = match status {
        BrownianStatus::Ok => c"ok",
        BrownianStatus::NullArgument => c"null-argument",
        BrownianStatus::InvalidUtf8 => c"invalid-utf8",
        BrownianStatus::ParseError => c"parse-error",
        BrownianStatus::InvalidParams => c"invalid-params",
        BrownianStatus::Singular => c"singular",
        BrownianStatus::Breakdown => c"breakdown",
        BrownianStatus::OutOfRange => c"out-of-range",
        BrownianStatus::InternalError => c"internal-error",
    };
    name.as_ptr()
}
