#ifndef HOMFLY_H
#define HOMFLY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HomflyStatus {
  HOMFLY_STATUS_OK = 0,
  HOMFLY_STATUS_NULL_POINTER = 1,
  HOMFLY_STATUS_INVALID_UTF8 = 2,
  HOMFLY_STATUS_PARSE_ERROR = 3,
  HOMFLY_STATUS_COMPUTE_ERROR = 4,
  HOMFLY_STATUS_METHOD_MISMATCH = 5,
  HOMFLY_STATUS_INVALID_ARGUMENT = 6,
  HOMFLY_STATUS_PANIC = 7,
} HomflyStatus;

// Method selectors accepted by [`homfly_compute`].
enum HomflyMethod
#if defined(__cplusplus) || __STDC_VERSION__ >= 202311L
  : uint32_t
#endif // defined(__cplusplus) || __STDC_VERSION__ >= 202311L
 {
  HOMFLY_METHOD_DESCENDING = 0,
  HOMFLY_METHOD_ASCENDING = 1,
  HOMFLY_METHOD_JAEGER = 2,
  HOMFLY_METHOD_JAEGER_DUAL = 3,
  // Every method, failing with `MethodMismatch` unless they agree.
  HOMFLY_METHOD_ALL = 4,
};
#ifndef __cplusplus
#if __STDC_VERSION__ >= 202311L
typedef enum HomflyMethod HomflyMethod;
#else
typedef uint32_t HomflyMethod;
#endif // __STDC_VERSION__ >= 202311L
#endif // __cplusplus

// A parsed braid word.
typedef struct HomflyBraid HomflyBraid;

// A two-variable Laurent polynomial in `z` and `a`.
typedef struct HomflyPoly HomflyPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the last failed call on this thread; empty after a
// successful call. Valid until the next call on the same thread.
const char *homfly_last_error(void);

// Parse a braid word such as `"1 -2 1 -2"`. `strands == 0` infers the
// strand count from the widest generator.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a writable pointer.
enum HomflyStatus homfly_braid_parse(const char *text, size_t strands, struct HomflyBraid **out);

// # Safety
// `braid` must come from [`homfly_braid_parse`] and not be used afterwards.
void homfly_braid_free(struct HomflyBraid *braid);

// Strand count, or 0 for a null handle.
//
// # Safety
// `braid` must be null or a live handle.
size_t homfly_braid_strands(const struct HomflyBraid *braid);

// Crossing count, or 0 for a null handle.
//
// # Safety
// `braid` must be null or a live handle.
size_t homfly_braid_crossings(const struct HomflyBraid *braid);

// HOMFLY polynomial of the closure by the given [`HomflyMethod`] value.
//
// # Safety
// `braid` must be a live handle and `out` a writable pointer.
enum HomflyStatus homfly_compute(const struct HomflyBraid *braid,
                                 uint32_t method,
                                 struct HomflyPoly **out);

// # Safety
// `poly` must come from this library and not be used afterwards.
void homfly_poly_free(struct HomflyPoly *poly);

// Canonical text form, e.g. `2*a^-2 - a^-4 + a^-2*z^2`.
//
// # Safety
// `poly` must be a live handle and `out` a writable pointer.
enum HomflyStatus homfly_poly_to_string(const struct HomflyPoly *poly, char **out);

// JSON form `[{"a": .., "z": .., "c": ..}, ..]`.
//
// # Safety
// `poly` must be a live handle and `out` a writable pointer.
enum HomflyStatus homfly_poly_to_json(const struct HomflyPoly *poly, char **out);

// Number of nonzero terms, or 0 for a null handle.
//
// # Safety
// `poly` must be null or a live handle.
size_t homfly_poly_term_count(const struct HomflyPoly *poly);

// Term `index` in canonical order: `coeff * z^z_deg * a^a_deg`.
//
// # Safety
// `poly` must be a live handle; the output pointers must be writable.
enum HomflyStatus homfly_poly_term(const struct HomflyPoly *poly,
                                   size_t index,
                                   int32_t *z_deg,
                                   int32_t *a_deg,
                                   int64_t *coeff);

// Whether two polynomials are equal; false if either handle is null.
//
// # Safety
// Both arguments must be null or live handles.
bool homfly_poly_equal(const struct HomflyPoly *lhs, const struct HomflyPoly *rhs);

// Full analysis report as JSON (the `analyze --json` schema).
//
// # Safety
// `braid` must be a live handle and `out` a writable pointer.
enum HomflyStatus homfly_analyze_json(const struct HomflyBraid *braid, char **out);

// Braid index: the certified value when `*certified` is true, otherwise
// the MFW lower bound.
//
// # Safety
// `braid` must be a live handle; the output pointers must be writable.
enum HomflyStatus homfly_braid_index(const struct HomflyBraid *braid,
                                     uint32_t *value,
                                     bool *certified);

// # Safety
// `s` must be null or a string returned by this library, not freed before.
void homfly_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOMFLY_H */
