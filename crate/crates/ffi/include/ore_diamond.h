#ifndef ORE_DIAMOND_H
#define ORE_DIAMOND_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum OdStatus {
  OD_STATUS_OK = 0,
  OD_STATUS_NULL_POINTER = 1,
  OD_STATUS_INVALID_UTF8 = 2,
  OD_STATUS_CONFIG = 3,
  OD_STATUS_PARSE = 4,
  OD_STATUS_DIVISION_BY_ZERO = 5,
  /**
   * Operands belong to different rings.
   */
  OD_STATUS_RING_MISMATCH = 6,
  /**
   * The operation is undefined for this input.
   */
  OD_STATUS_DOMAIN = 7,
  OD_STATUS_PANIC = 8,
} OdStatus;

typedef enum OdType {
  OD_TYPE_A = 0,
  OD_TYPE_B = 1,
  OD_TYPE_C = 2,
  OD_TYPE_UNIT = 3,
  OD_TYPE_ZERO = 4,
  OD_TYPE_UNNORMALIZED = 5,
} OdType;

/**
 * A skew polynomial ring `k[X]_(X)[theta; alpha]`.
 */
typedef struct OdRing OdRing;

/**
 * An element of an `OdRing`.
 */
typedef struct OdSkew OdSkew;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * Valid until the next call on the same thread.
 */
const char *od_last_error(void);

/**
 * Creates a ring. `field` is `q`, `q:<rational>`, `fp:<p>` or `gf:<p>^<m>`;
 * `q` may be null; `characteristic` is 0 or a prime.
 *
 * # Safety
 * String arguments must be null or valid NUL-terminated strings; `out`
 * must be a valid pointer.
 */
enum OdStatus od_ring_new(const char *field,
                          const char *q,
                          uint32_t characteristic,
                          struct OdRing **out);

/**
 * # Safety
 * `ring` must be null or a handle from `od_ring_new` not yet freed.
 */
void od_ring_free(struct OdRing *ring);

/**
 * Parses an element such as `1+X*theta` in `ring`.
 *
 * # Safety
 * Pointers must be valid as described for `od_ring_new`.
 */
enum OdStatus od_skew_parse(const struct OdRing *ring, const char *text, struct OdSkew **out);

/**
 * # Safety
 * `p` must be null or a handle not yet freed.
 */
void od_skew_free(struct OdSkew *p);

/**
 * Degree in `theta`, or -1 for zero.
 *
 * # Safety
 * `p` and `out` must be valid pointers.
 */
enum OdStatus od_skew_degree(const struct OdSkew *p, int64_t *out);

/**
 * Canonical text of `p`; free with `od_string_free`.
 *
 * # Safety
 * `p` and `out` must be valid pointers.
 */
enum OdStatus od_skew_to_string(const struct OdSkew *p, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void od_string_free(char *s);

/**
 * `out = a * b`.
 *
 * # Safety
 * All pointers must be valid handles or output slots.
 */
enum OdStatus od_skew_mul(const struct OdRing *ring,
                          const struct OdSkew *a,
                          const struct OdSkew *b,
                          struct OdSkew **out);

/**
 * `a = quot * b + rem` with `deg rem < deg b`.
 *
 * # Safety
 * All pointers must be valid handles or output slots.
 */
enum OdStatus od_skew_right_divide(const struct OdRing *ring,
                                   const struct OdSkew *a,
                                   const struct OdSkew *b,
                                   struct OdSkew **quot,
                                   struct OdSkew **rem);

/**
 * `a = b * quot + rem` with `deg rem < deg b`.
 *
 * # Safety
 * All pointers must be valid handles or output slots.
 */
enum OdStatus od_skew_left_divide(const struct OdRing *ring,
                                  const struct OdSkew *a,
                                  const struct OdSkew *b,
                                  struct OdSkew **quot,
                                  struct OdSkew **rem);

/**
 * Monic greatest common right divisor.
 *
 * # Safety
 * All pointers must be valid handles or output slots.
 */
enum OdStatus od_skew_gcrd(const struct OdRing *ring,
                           const struct OdSkew *a,
                           const struct OdSkew *b,
                           struct OdSkew **out);

/**
 * Monic least common left multiple.
 *
 * # Safety
 * All pointers must be valid handles or output slots.
 */
enum OdStatus od_skew_lclm(const struct OdRing *ring,
                           const struct OdSkew *a,
                           const struct OdSkew *b,
                           struct OdSkew **out);

/**
 * Shape of `p` after unit normalization.
 *
 * # Safety
 * `p` and `out` must be valid pointers.
 */
enum OdStatus od_classify(const struct OdSkew *p, enum OdType *out);

/**
 * Runs the factorization check on `c b` and writes the JSON report to
 * `json_out` (free with `od_string_free`). `refuted` is set to 1 when both
 * ansaetze were refuted up to `degree_bound`, else 0.
 *
 * # Safety
 * All pointers must be valid handles or output slots.
 */
enum OdStatus od_check_commutativity(const struct OdRing *ring,
                                     const struct OdSkew *c,
                                     const struct OdSkew *b,
                                     uint32_t degree_bound,
                                     int32_t *refuted,
                                     char **json_out);

/**
 * Library version, static storage.
 */
const char *od_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORE_DIAMOND_H */
