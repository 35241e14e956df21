/* C interface to the posetdyn engine. Generated by cbindgen; do not edit. */

#ifndef POSETDYN_H
#define POSETDYN_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes mirrored in the header.
 */
#define POSETDYN_OK 0

#define POSETDYN_ERR_INVALID_INPUT 1

#define POSETDYN_ERR_CAP_EXCEEDED 2

#define POSETDYN_ERR_INTERNAL 3

#define POSETDYN_ERR_NULL_POINTER 4

#define POSETDYN_ERR_UTF8 5

/**
 * Opaque poset handle.
 */
typedef struct PosetdynPoset PosetdynPoset;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Last error message for this thread, or null. The returned string is owned
 * by the library and valid until the next failing call on the same thread.
 */
const char *posetdyn_last_error(void);

/**
 * Build a poset from a spec string (`chain:4`, `rect:2x3`, `W`, ...).
 * Returns null on error.
 *
 * # Safety
 * `spec` must be a valid NUL-terminated string or null.
 */
struct PosetdynPoset *posetdyn_poset_build(const char *spec);

/**
 * Parse a poset from its JSON interchange form. Returns null on error.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string or null.
 */
struct PosetdynPoset *posetdyn_poset_from_json(const char *json);

/**
 * Serialize a poset to JSON. Free the result with `posetdyn_string_free`.
 *
 * # Safety
 * `p` must be a live handle from this library or null.
 */
char *posetdyn_poset_to_json(const struct PosetdynPoset *p);

/**
 * # Safety
 * `p` must be a handle from this library, not yet freed, or null.
 */
void posetdyn_poset_free(struct PosetdynPoset *p);

/**
 * # Safety
 * `s` must be a string returned by this library, not yet freed, or null.
 */
void posetdyn_string_free(char *s);

/**
 * Element count; 0 on a null handle.
 *
 * # Safety
 * `p` must be a live handle from this library or null.
 */
size_t posetdyn_poset_n(const struct PosetdynPoset *p);

/**
 * Length of the longest chain; -1 on a null handle.
 *
 * # Safety
 * `p` must be a live handle from this library or null.
 */
int64_t posetdyn_poset_rank(const struct PosetdynPoset *p);

/**
 * 1 when graded (rank-function convention), 0 when not, -1 on null.
 *
 * # Safety
 * `p` must be a live handle from this library or null.
 */
int posetdyn_poset_is_graded(const struct PosetdynPoset *p);

/**
 * Apply `steps` K-promotions (negative = inverse) in place to `labels`
 * (u32 per element, length n, values 1..=q).
 *
 * # Safety
 * `p` must be a live handle or null; `labels` must point to `len` readable
 * and writable u32 values or be null.
 */
int posetdyn_promote(const struct PosetdynPoset *p,
                     uint32_t *labels,
                     size_t len,
                     size_t q,
                     int64_t steps);

/**
 * Orbit cardinality of a tableau under K-promotion.
 *
 * # Safety
 * `p` must be a live handle or null; `labels` must point to `len` readable
 * u32 values or be null; `out_size` must be writable or null.
 */
int posetdyn_promotion_orbit_size(const struct PosetdynPoset *p,
                                  const uint32_t *labels,
                                  size_t len,
                                  size_t q,
                                  uint64_t *out_size);

/**
 * Number of packed promotion orbits at height q (census orbit count).
 *
 * # Safety
 * `p` must be a live handle or null; `out_count` must be writable or null.
 */
int posetdyn_packed_orbit_count(const struct PosetdynPoset *p, size_t q, uint64_t *out_count);

/**
 * Decide NRP rowmotion. `out_is_nrp` gets 1 or 0.
 *
 * # Safety
 * `p` must be a live handle or null; `out_is_nrp` must be writable or null.
 */
int posetdyn_nrp_check(const struct PosetdynPoset *p, int *out_is_nrp);

/**
 * NRP verdict as a JSON document (is_nrp, q range, witnesses).
 * Free with `posetdyn_string_free`; null on error.
 *
 * # Safety
 * `p` must be a live handle from this library or null.
 */
char *posetdyn_nrp_check_json(const struct PosetdynPoset *p);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POSETDYN_H */
