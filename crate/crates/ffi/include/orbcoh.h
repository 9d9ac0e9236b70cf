#ifndef ORBCOH_H
#define ORBCOH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes; the numeric values of the first five match the CLI exit
 * codes.
 */
typedef enum OrbStatus {
  ORB_STATUS_OK = 0,
  ORB_STATUS_PARSE = 1,
  ORB_STATUS_VALIDATION = 2,
  ORB_STATUS_CAP_EXCEEDED = 3,
  ORB_STATUS_VERIFY_FAILED = 4,
  ORB_STATUS_NULL_POINTER = 5,
  ORB_STATUS_INVALID_UTF8 = 6,
  ORB_STATUS_PANIC = 7,
} OrbStatus;

/**
 * Opaque handle to an enumerated finite matrix group.
 */
typedef struct OrbGroup OrbGroup;

/**
 * Opaque handle to a graded ring with exact structure constants.
 */
typedef struct OrbRing OrbRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or "" after a
 * success. The pointer stays valid until the next call into this library
 * on the same thread.
 */
const char *orb_last_error_message(void);

/**
 * Release a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void orb_string_free(char *s);

/**
 * Parse a group file and close the generators, producing at most `cap`
 * elements (0 selects the default cap).
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum OrbStatus orb_group_from_json(const char *json, size_t cap, struct OrbGroup **out);

/**
 * Load a built-in catalog group by name (for example "q8" or "s3").
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum OrbStatus orb_group_from_catalog(const char *name, struct OrbGroup **out);

/**
 * # Safety
 * `g` must come from this library and not have been freed already.
 */
void orb_group_free(struct OrbGroup *g);

/**
 * |G|, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live group handle.
 */
size_t orb_group_order(const struct OrbGroup *g);

/**
 * Dimension n of the representation, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live group handle.
 */
size_t orb_group_dimension(const struct OrbGroup *g);

/**
 * Number of conjugacy classes, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live group handle.
 */
size_t orb_group_class_count(const struct OrbGroup *g);

/**
 * True when every element has determinant 1.
 *
 * # Safety
 * `g` must be null or a live group handle.
 */
bool orb_group_is_sl(const struct OrbGroup *g);

/**
 * Sector table as JSON.
 *
 * # Safety
 * `g` must be a live group handle; `out` must be writable.
 */
enum OrbStatus orb_sectors_json(const struct OrbGroup *g, char **out);

/**
 * Cohomology of the point quotient pt/G as JSON.
 *
 * # Safety
 * `g` must be a live group handle; `out` must be writable.
 */
enum OrbStatus orb_cohomology_point_json(const struct OrbGroup *g, char **out);

/**
 * Orbifold Hodge numbers of C^n/G as JSON.
 *
 * # Safety
 * `g` must be a live group handle; `out` must be writable.
 */
enum OrbStatus orb_hodge_linear_json(const struct OrbGroup *g, char **out);

/**
 * Orbifold Betti numbers of a torus quotient given as a torus file.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum OrbStatus orb_torus_betti_json(const char *json, size_t cap, char **out);

/**
 * Orbifold Betti numbers of the weighted projective line WP(d1, d2).
 *
 * # Safety
 * `out` must be writable.
 */
enum OrbStatus orb_catalog_wp_json(uint64_t d1, uint64_t d2, char **out);

/**
 * Writes h^{1,1} and h^{2,1} of the Borcea–Voisin threefold for (r, a, delta).
 *
 * # Safety
 * `h11` and `h21` must be writable.
 */
enum OrbStatus orb_catalog_bv(int64_t r, int64_t a, int64_t delta, uint64_t *h11, uint64_t *h21);

/**
 * Cohomology ring of pt/G.
 *
 * # Safety
 * `g` must be a live group handle; `out` must be writable.
 */
enum OrbStatus orb_ring_point(const struct OrbGroup *g, struct OrbRing **out);

/**
 * Cup-product ring of C^n/G for G ⊂ SL(n).
 *
 * # Safety
 * `g` must be a live group handle; `out` must be writable.
 */
enum OrbStatus orb_ring_linear(const struct OrbGroup *g, struct OrbRing **out);

/**
 * Orbifold cohomology ring of WP(d1, d2).
 *
 * # Safety
 * `out` must be writable.
 */
enum OrbStatus orb_ring_wp(uint64_t d1, uint64_t d2, struct OrbRing **out);

/**
 * # Safety
 * `r` must come from this library and not have been freed already.
 */
void orb_ring_free(struct OrbRing *r);

/**
 * Number of basis elements, or 0 for a null handle.
 *
 * # Safety
 * `r` must be null or a live ring handle.
 */
size_t orb_ring_dim(const struct OrbRing *r);

/**
 * Ring as JSON: basis labels, degrees, sparse [i, j, k, "p/q"] products
 * and the pairing matrix (null when undefined).
 *
 * # Safety
 * `r` must be a live ring handle; `out` must be writable.
 */
enum OrbStatus orb_ring_to_json(const struct OrbRing *r, char **out);

/**
 * Check the ring axioms. Returns `VerifyFailed` when a check fails; the
 * first counterexample is then available from [`orb_last_error_message`].
 * If `report` is non-null it receives the full report as JSON.
 *
 * # Safety
 * `r` must be a live ring handle; `report` must be null or writable.
 */
enum OrbStatus orb_ring_verify(const struct OrbRing *r, char **report);

/**
 * Euler characteristic of a rank-`rank` bundle over a genus-`genus`
 * 2-orbifold. `marks` holds `n_marks` strings "m:e1,…,en"; `c` is the
 * first Chern number as "p/q".
 *
 * # Safety
 * `marks` must point to `n_marks` NUL-terminated strings (or be null when
 * `n_marks` is 0); `c` must be NUL-terminated; `out` must be writable.
 */
enum OrbStatus orb_orbicurve_chi(uint64_t genus,
                                 size_t rank,
                                 const char *const *marks,
                                 size_t n_marks,
                                 const char *c,
                                 int64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORBCOH_H */
