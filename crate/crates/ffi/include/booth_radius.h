#ifndef BOOTH_RADIUS_H
#define BOOTH_RADIUS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BoothStatus {
  BOOTH_STATUS_OK = 0,
  BOOTH_STATUS_NULL_POINTER = 1,
  BOOTH_STATUS_DOMAIN_ERROR = 2,
  BOOTH_STATUS_ORACLE_FAILURE = 3,
  BOOTH_STATUS_PANIC = 4,
} BoothStatus;

typedef enum BoothClassKind {
  BOOTH_CLASS_KIND_STARLIKE_ORDER = 0,
  BOOTH_CLASS_KIND_STARLIKE = 1,
  BOOTH_CLASS_KIND_CONVEX = 2,
  BOOTH_CLASS_KIND_M_CLASS = 3,
  BOOTH_CLASS_KIND_JANOWSKI = 4,
  BOOTH_CLASS_KIND_PARVATHAM = 5,
  BOOTH_CLASS_KIND_FOURNIER = 6,
} BoothClassKind;

typedef enum BoothBranch {
  BOOTH_BRANCH_RHO0 = 0,
  BOOTH_BRANCH_RHO0_TILDE = 1,
  BOOTH_BRANCH_ALPHA_ZERO = 2,
  BOOTH_BRANCH_CLAMPED_ONE = 3,
} BoothBranch;

/**
 * Opaque function-class handle.
 */
typedef struct BoothClass BoothClass;

/**
 * Opaque region handle.
 */
typedef struct BoothRegion BoothRegion;

typedef struct BoothComplex {
  double re;
  double im;
} BoothComplex;

typedef struct BoothMembership {
  bool inside;
  /**
   * `|w − 1| − ρ(arg(w − 1))`; negative inside.
   */
  double radial_margin;
} BoothMembership;

typedef struct BoothRadius {
  double value;
  double raw;
  enum BoothBranch branch;
  bool clamped;
} BoothRadius;

typedef struct BoothInclusion {
  bool holds;
  /**
   * 0 when neither sufficient condition applies, else 1 or 2.
   */
  int32_t via_condition;
} BoothInclusion;

typedef struct BoothSubordination {
  bool holds;
  double worst_margin;
  double worst_angle;
} BoothSubordination;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *booth_version(void);

/**
 * Message for the last failed call on this thread, or null after a success.
 *
 * The pointer stays valid until the next call into this library on the same
 * thread.
 */
const char *booth_last_error(void);

/**
 * # Safety
 * `out` must be valid for writes. On success `*out` owns a handle that must
 * be released with [`booth_region_free`].
 */
enum BoothStatus booth_region_new(double alpha, struct BoothRegion **out);

/**
 * # Safety
 * `region` must be null or a handle from [`booth_region_new`] not yet freed.
 */
void booth_region_free(struct BoothRegion *region);

/**
 * Builds a class. `p1` is β (or `A` for Janowski) and `p2` is `B`; unused
 * parameters are ignored.
 *
 * # Safety
 * `kind` must be one of the declared enumerators and `out` valid for
 * writes. On success `*out` owns a handle that must be released with
 * [`booth_class_free`].
 */
enum BoothStatus booth_class_new(enum BoothClassKind kind,
                                 double p1,
                                 double p2,
                                 struct BoothClass **out);

/**
 * # Safety
 * `class` must be null or a handle from [`booth_class_new`] not yet freed.
 */
void booth_class_free(struct BoothClass *class_);

/**
 * `G_α(z)` for `|z| < 1`.
 *
 * # Safety
 * `region` must be a live handle and `out` valid for writes.
 */
enum BoothStatus booth_eval_map(const struct BoothRegion *region,
                                struct BoothComplex z,
                                struct BoothComplex *out);

/**
 * # Safety
 * `region` must be a live handle and `out` valid for writes.
 */
enum BoothStatus booth_boundary_point(const struct BoothRegion *region,
                                      double t,
                                      struct BoothComplex *out);

/**
 * # Safety
 * `region` must be a live handle and `out` valid for writes.
 */
enum BoothStatus booth_polar_boundary_radius(const struct BoothRegion *region,
                                             double theta,
                                             double *out);

/**
 * # Safety
 * `region` must be a live handle and `out` valid for writes.
 */
enum BoothStatus booth_contains(const struct BoothRegion *region,
                                struct BoothComplex w,
                                struct BoothMembership *out);

/**
 * Largest disc about the real `center` inside `G_α(𝔻)`.
 *
 * # Safety
 * `region` must be a live handle and `out` valid for writes.
 */
enum BoothStatus booth_inscribed_radius(const struct BoothRegion *region,
                                        double center,
                                        double *out);

/**
 * Smallest disc about the real `center` containing `G_α(𝔻)`.
 *
 * # Safety
 * `region` must be a live handle and `out` valid for writes.
 */
enum BoothStatus booth_circumscribed_radius(const struct BoothRegion *region,
                                            double center,
                                            double *out);

/**
 * # Safety
 * `class` and `region` must be live handles and `out` valid for writes.
 */
enum BoothStatus booth_bs_radius(const struct BoothClass *class_,
                                 const struct BoothRegion *region,
                                 struct BoothRadius *out);

/**
 * # Safety
 * `region` must be a live handle and `out` valid for writes.
 */
enum BoothStatus booth_inclusion_holds(const struct BoothRegion *region,
                                       double a,
                                       double b,
                                       struct BoothInclusion *out);

/**
 * Brute-force radius by bisection on the containment margin.
 *
 * # Safety
 * `class` and `region` must be live handles and `out` valid for writes.
 */
enum BoothStatus booth_oracle_bs_radius(const struct BoothClass *class_,
                                        const struct BoothRegion *region,
                                        double *out);

/**
 * Samples `zf′/f` of the extremal function on `n ≥ 64` points of `|z| = r`.
 *
 * # Safety
 * `class` and `region` must be live handles and `out` valid for writes.
 */
enum BoothStatus booth_subordination_check(const struct BoothClass *class_,
                                           const struct BoothRegion *region,
                                           double r,
                                           size_t n,
                                           struct BoothSubordination *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BOOTH_RADIUS_H */
