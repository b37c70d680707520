/* Brownian-type matrices: C interface. Generated — do not edit. */

#ifndef BROWNIAN_H
#define BROWNIAN_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every API function.
 */
typedef enum {
  /**
   * Success.
   */
  BROWNIAN_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  BROWNIAN_STATUS_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  BROWNIAN_STATUS_INVALID_UTF8 = 2,
  /**
   * JSON or number parsing failed.
   */
  BROWNIAN_STATUS_PARSE_ERROR = 3,
  /**
   * The parameters are structurally invalid (lengths, order, variant).
   */
  BROWNIAN_STATUS_INVALID_PARAMS = 4,
  /**
   * The parameters describe a singular matrix.
   */
  BROWNIAN_STATUS_SINGULAR = 5,
  /**
   * A recurrence or elimination divisor is zero for this instance.
   */
  BROWNIAN_STATUS_BREAKDOWN = 6,
  /**
   * A row, column, or enum value is out of range.
   */
  BROWNIAN_STATUS_OUT_OF_RANGE = 7,
  /**
   * An unexpected internal failure (caught panic).
   */
  BROWNIAN_STATUS_INTERNAL_ERROR = 8,
} BrownianStatus;

/**
 * Matrix family selector.
 */
typedef enum {
  BROWNIAN_VARIANT_A1 = 1,
  BROWNIAN_VARIANT_A2 = 2,
} BrownianVariant;

/**
 * Inversion algorithm selector.
 */
typedef enum {
  /**
   * Entry formulas, O(n²).
   */
  BROWNIAN_METHOD_CLOSED = 0,
  /**
   * Row-wise recurrence, O(n²), may break down.
   */
  BROWNIAN_METHOD_RECURSIVE_I = 1,
  /**
   * Column-wise recurrence, O(n²), may break down.
   */
  BROWNIAN_METHOD_RECURSIVE_J = 2,
  /**
   * Four-stage elementary row elimination, may break down.
   */
  BROWNIAN_METHOD_ELIMINATION = 3,
  /**
   * Dense Gauss–Jordan reference, O(n³).
   */
  BROWNIAN_METHOD_ORACLE = 4,
} BrownianMethod;

/**
 * Opaque square-matrix handle (release via `brownian_matrix_free`).
 */
typedef struct BrownianMatrixHandle BrownianMatrixHandle;

/**
 * Opaque parameter-set handle (create via `brownian_params_from_json` or
 * `brownian_params_random`, release via `brownian_params_free`).
 */
typedef struct BrownianParamsHandle BrownianParamsHandle;

/**
 * Operation counts of a recursive inversion.
 */
typedef struct {
  uint64_t mul_div;
  uint64_t add_sub;
} BrownianOpCounts;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a parameter set from a JSON document.
 *
 * Expected shape: `{"variant": "A1", "k": [...], "a": [...], "b": [...]}`
 * where array entries are integers or strings ("3/4", "0.25", "1e3").
 * `a` must have one entry fewer than `k` and `b`.
 *
 * # Safety
 * `json` must point to a NUL-terminated string; `out` must be a valid
 * pointer. On `Ok`, `*out` owns a new handle.
 */
BrownianStatus brownian_params_from_json(const char *json, BrownianParamsHandle **out);

/**
 * Draws a seeded random valid parameter set of order `n`.
 *
 * # Safety
 * `out` must be a valid pointer. On `Ok`, `*out` owns a new handle.
 */
BrownianStatus brownian_params_random(BrownianVariant variant,
                                      size_t n,
                                      uint64_t seed,
                                      BrownianParamsHandle **out);

/**
 * Serializes the parameter set as pretty-printed JSON.
 *
 * # Safety
 * `params` must be a live handle from this library and `out` a valid
 * pointer. On `Ok`, `*out` must be released with `brownian_string_free`.
 */
BrownianStatus brownian_params_to_json(const BrownianParamsHandle *params, char **out);

/**
 * Returns the matrix order, or 0 if `params` is NULL.
 *
 * # Safety
 * `params` must be NULL or a live handle from this library.
 */
size_t brownian_params_order(const BrownianParamsHandle *params);

/**
 * Checks invertibility: `Ok` for valid parameters, `Singular` otherwise.
 *
 * # Safety
 * `params` must be a live handle from this library.
 */
BrownianStatus brownian_params_validate(const BrownianParamsHandle *params);

/**
 * Releases a parameter handle. NULL is ignored.
 *
 * # Safety
 * `params` must be NULL or an unreleased handle from this library.
 */
void brownian_params_free(BrownianParamsHandle *params);

/**
 * Builds the matrix the parameters describe.
 *
 * # Safety
 * `params` must be a live handle and `out` a valid pointer. On `Ok`,
 * `*out` owns a new matrix handle.
 */
BrownianStatus brownian_build_matrix(const BrownianParamsHandle *params,
                                     BrownianMatrixHandle **out);

/**
 * Inverts the matrix by the chosen method, in exact arithmetic.
 *
 * Fails with `Singular` on non-invertible parameters and `Breakdown` when
 * a recursive or elimination divisor vanishes for this instance (the
 * closed form never breaks down on valid parameters).
 *
 * # Safety
 * `params` must be a live handle and `out` a valid pointer. On `Ok`,
 * `*out` owns a new matrix handle.
 */
BrownianStatus brownian_inverse(const BrownianParamsHandle *params,
                                BrownianMethod method,
                                BrownianMatrixHandle **out);

/**
 * Reports the operation counts of a recursive inversion without keeping
 * the result. `method` must be `RecursiveI` or `RecursiveJ`.
 *
 * # Safety
 * `params` must be a live handle and `counts` a valid pointer.
 */
BrownianStatus brownian_op_counts(const BrownianParamsHandle *params,
                                  BrownianMethod method,
                                  BrownianOpCounts *counts);

/**
 * Writes the exact determinant as a decimal string ("0", "7", "-3/4").
 *
 * Never fails on singular input: the determinant of a singular instance
 * is exactly "0".
 *
 * # Safety
 * `params` must be a live handle and `out` a valid pointer. On `Ok`,
 * `*out` must be released with `brownian_string_free`.
 */
BrownianStatus brownian_determinant_string(const BrownianParamsHandle *params, char **out);

/**
 * Writes the determinant rounded to the nearest double.
 *
 * # Safety
 * `params` must be a live handle and `out` a valid pointer.
 */
BrownianStatus brownian_determinant_f64(const BrownianParamsHandle *params, double *out);

/**
 * Returns the matrix order, or 0 if `matrix` is NULL.
 *
 * # Safety
 * `matrix` must be NULL or a live handle from this library.
 */
size_t brownian_matrix_order(const BrownianMatrixHandle *matrix);

/**
 * Reads entry (row, col), 0-based, rounded to the nearest double.
 *
 * # Safety
 * `matrix` must be a live handle and `out` a valid pointer.
 */
BrownianStatus brownian_matrix_get_f64(const BrownianMatrixHandle *matrix,
                                       size_t row,
                                       size_t col,
                                       double *out);

/**
 * Writes entry (row, col), 0-based, as an exact decimal string.
 *
 * # Safety
 * `matrix` must be a live handle and `out` a valid pointer. On `Ok`,
 * `*out` must be released with `brownian_string_free`.
 */
BrownianStatus brownian_matrix_entry_string(const BrownianMatrixHandle *matrix,
                                            size_t row,
                                            size_t col,
                                            char **out);

/**
 * Serializes the whole matrix as exact CSV (one line per row).
 *
 * # Safety
 * `matrix` must be a live handle and `out` a valid pointer. On `Ok`,
 * `*out` must be released with `brownian_string_free`.
 */
BrownianStatus brownian_matrix_to_csv(const BrownianMatrixHandle *matrix, char **out);

/**
 * Releases a matrix handle. NULL is ignored.
 *
 * # Safety
 * `matrix` must be NULL or an unreleased handle from this library.
 */
void brownian_matrix_free(BrownianMatrixHandle *matrix);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or an unreleased string returned by this library.
 */
void brownian_string_free(char *s);

/**
 * Returns the static name of a status code (never NULL, never freed).
 */
const char *brownian_status_name(BrownianStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BROWNIAN_H */
