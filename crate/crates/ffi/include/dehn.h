#ifndef DEHN_H
#define DEHN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DehnStatus {
  DEHN_STATUS_OK = 0,
  DEHN_STATUS_NULL_POINTER = 1,
  DEHN_STATUS_INVALID_ARGUMENT = 2,
  DEHN_STATUS_PRECONDITION_VIOLATED = 3,
  DEHN_STATUS_OVERFLOW = 4,
  DEHN_STATUS_PARSE = 5,
  DEHN_STATUS_INTERNAL = 6,
} DehnStatus;

typedef enum DehnClassification {
  DEHN_CLASSIFICATION_NORM = 0,
  DEHN_CLASSIFICATION_INDEFINITE = 1,
  DEHN_CLASSIFICATION_ZERO = 2,
} DehnClassification;

typedef enum DehnSurgeryKind {
  DEHN_SURGERY_KIND_MERIDIAN_S3 = 0,
  DEHN_SURGERY_KIND_REDUCIBLE = 1,
  DEHN_SURGERY_KIND_CYCLIC = 2,
  DEHN_SURGERY_KIND_FINITE_SEIFERT = 3,
  DEHN_SURGERY_KIND_INFINITE_SEIFERT = 4,
} DehnSurgeryKind;

/**
 * Finite group types; `DEHN_FINITE_TYPE_NONE` marks an infinite group.
 */
typedef enum DehnFiniteType {
  DEHN_FINITE_TYPE_C = 0,
  DEHN_FINITE_TYPE_D = 1,
  DEHN_FINITE_TYPE_T = 2,
  DEHN_FINITE_TYPE_O = 3,
  DEHN_FINITE_TYPE_I = 4,
  DEHN_FINITE_TYPE_Q = 5,
  DEHN_FINITE_TYPE_NONE = 6,
} DehnFiniteType;

typedef enum DehnVerdict {
  DEHN_VERDICT_NO = 0,
  DEHN_VERDICT_YES = 1,
  DEHN_VERDICT_UNDETERMINED = 2,
} DehnVerdict;

/**
 * Opaque Seifert space handle.
 */
typedef struct DehnSeifert DehnSeifert;

/**
 * Opaque seminorm handle.
 */
typedef struct DehnSeminorm DehnSeminorm;

/**
 * Result of torus-knot surgery. `a`, `b` are the lens orders of a reducible
 * result, the cyclic order in `a`, or the Seifert triple `(a, b, e)`.
 */
typedef struct DehnSurgery {
  enum DehnSurgeryKind kind;
  enum DehnFiniteType finite_type;
  uint64_t a;
  uint64_t b;
  uint64_t e;
} DehnSurgery;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *dehn_last_error(void);

/**
 * `|p1 q2 − p2 q1|`.
 */
enum DehnStatus dehn_slope_distance(int64_t p1, int64_t q1, int64_t p2, int64_t q2, uint64_t *out);

/**
 * Canonical representative of the slope `±(p, q)`: `p > 0`, or `(0, 1)`.
 */
enum DehnStatus dehn_slope_canonical(int64_t p, int64_t q, int64_t *out_p, int64_t *out_q);

/**
 * Seminorm from `n` functionals stored as `coeffs[2i], coeffs[2i+1]`.
 *
 * # Safety
 * `coeffs` must point to `2 * n` readable integers (or be null when `n == 0`).
 */
enum DehnStatus dehn_seminorm_new(const int64_t *coeffs, size_t n, struct DehnSeminorm **out);

/**
 * Releases a seminorm handle; null is ignored.
 *
 * # Safety
 * `h` must be null or a handle from [`dehn_seminorm_new`] not yet freed.
 */
void dehn_seminorm_free(struct DehnSeminorm *h);

/**
 * Classification, and the kernel slope when indefinite (else `(0, 0)`).
 */
enum DehnStatus dehn_seminorm_classify(const struct DehnSeminorm *h,
                                       enum DehnClassification *out_kind,
                                       int64_t *out_kernel_p,
                                       int64_t *out_kernel_q);

/**
 * Smallest nonzero value on the lattice, 0 for the zero seminorm.
 */
enum DehnStatus dehn_seminorm_minimal_value(const struct DehnSeminorm *h, int64_t *out);

enum DehnStatus dehn_seminorm_evaluate(const struct DehnSeminorm *h,
                                       int64_t p,
                                       int64_t q,
                                       int64_t *out);

/**
 * Surgery on the `(p, q)` torus knot along `m/n`.
 */
enum DehnStatus dehn_torus_knot_surgery(uint64_t p,
                                        uint64_t q,
                                        int64_t m,
                                        int64_t n,
                                        struct DehnSurgery *out);

/**
 * Type of the `(p, q, e)` triangle group.
 */
enum DehnStatus dehn_triangle_type(uint64_t p, uint64_t q, uint64_t e, enum DehnFiniteType *out);

/**
 * Norm bound for a filling of type `t` (a `DehnFiniteType` value); `out_exact` is 1 when the bound is an
 * equality. Assumes the multiplicity hypothesis is certified.
 */
enum DehnStatus dehn_norm_bound(int32_t t,
                                int64_t s,
                                uint64_t n_dihedral,
                                bool vi2,
                                int64_t *out_value,
                                bool *out_exact);

/**
 * Distance bound as a reduced fraction.
 */
enum DehnStatus dehn_distance_bound(int32_t t,
                                    int64_t s,
                                    uint64_t n_dihedral,
                                    bool vi2,
                                    int64_t *out_num,
                                    int64_t *out_den);

/**
 * Seifert space from its JSON description
 * `{"base": {"orientable": bool, "genus": int}, "gamma": int, "fibers": [[a, b], ...]}`.
 *
 * # Safety
 * `json` must be null or a valid nul-terminated string.
 */
enum DehnStatus dehn_seifert_from_json(const char *json, struct DehnSeifert **out);

/**
 * Releases a Seifert handle; null is ignored.
 *
 * # Safety
 * `h` must be null or a handle from [`dehn_seifert_from_json`] not yet freed.
 */
void dehn_seifert_free(struct DehnSeifert *h);

/**
 * First homology `Z^rank ⊕ Z/t₁ ⊕ …`. Writes up to `cap` torsion
 * coefficients and their total count to `out_len`; fails with
 * `InvalidArgument` when `cap` is too small.
 *
 * # Safety
 * `torsion` must point to `cap` writable integers (or be null when `cap == 0`).
 */
enum DehnStatus dehn_seifert_h1(const struct DehnSeifert *h,
                                uint64_t *out_rank,
                                int64_t *torsion,
                                size_t cap,
                                size_t *out_len);

/**
 * Orbifold Euler characteristic of the base as a reduced fraction.
 */
enum DehnStatus dehn_seifert_chi_orb(const struct DehnSeifert *h,
                                     int64_t *out_num,
                                     int64_t *out_den);

enum DehnStatus dehn_seifert_is_haken(const struct DehnSeifert *h, enum DehnVerdict *out);

/**
 * Whether the character variety has a curve through an irreducible character.
 */
enum DehnStatus dehn_seifert_irreducible_curve(const struct DehnSeifert *h, enum DehnVerdict *out);

enum DehnStatus dehn_seifert_virtually_irreducible_curve(const struct DehnSeifert *h,
                                                         enum DehnVerdict *out);

/**
 * Boundary slope `num/den` of `K_{4n+6}` and `|H₁|` of surgery along it.
 */
enum DehnStatus dehn_pretzel_family(int64_t n,
                                    int64_t *out_num,
                                    int64_t *out_den,
                                    uint64_t *out_h1);

/**
 * Components and curve components of the character variety of `Z/p * Z/q`.
 */
enum DehnStatus dehn_component_counts(uint64_t p,
                                      uint64_t q,
                                      uint64_t *out_total,
                                      uint64_t *out_curves);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DEHN_H */
