#ifndef DOMDIM_H
#define DOMDIM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DdExtNatKind {
  DD_EXT_NAT_KIND_FINITE = 0,
  DD_EXT_NAT_KIND_INFINITY = 1,
  // Lower bound from a truncated computation.
  DD_EXT_NAT_KIND_AT_LEAST = 2,
} DdExtNatKind;

// Status codes returned by every fallible function.
typedef enum DdStatus {
  DD_STATUS_OK = 0,
  DD_STATUS_NULL_POINTER = 1,
  DD_STATUS_INVALID_UTF8 = 2,
  DD_STATUS_PARSE_ERROR = 3,
  DD_STATUS_INVALID_MODULE = 4,
  DD_STATUS_UNSUPPORTED = 5,
  DD_STATUS_INTERNAL = 6,
} DdStatus;

// Opaque handle to an endomorphism algebra.
typedef struct DdEndo DdEndo;

// Opaque handle to a validated Kupisch series.
typedef struct DdKupisch DdKupisch;

// A natural number, infinity, or a lower bound; `value` is meaningless
// for `Infinity`.
typedef struct DdExtNat {
  enum DdExtNatKind kind;
  uint64_t value;
} DdExtNat;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses `"linear:3,3,3,2,1"` or `"cyclic:2,3"` into a new handle.
//
// # Safety
// `text` must be a valid C string and `out` a valid pointer.
enum DdStatus dd_kupisch_parse(const char *text, struct DdKupisch **out);

// # Safety
// `k` must be null or a handle from [`dd_kupisch_parse`] not yet freed.
void dd_kupisch_free(struct DdKupisch *k);

// Number of simple modules and dimension of the algebra.
//
// # Safety
// `k` must be a live handle; `n` and `dim` valid pointers.
enum DdStatus dd_kupisch_dims(const struct DdKupisch *k, size_t *n, size_t *dim);

// Dominant dimension, global dimension and Gorenstein dimension; any of
// the out pointers may be null.
//
// # Safety
// `k` must be a live handle; non-null out pointers must be valid.
enum DdStatus dd_kupisch_invariants(const struct DdKupisch *k,
                                    struct DdExtNat *domdim,
                                    struct DdExtNat *gldim,
                                    struct DdExtNat *gorenstein_dim);

// `dim Hom(M(i,k), M(j,l))`.
//
// # Safety
// `k` must be a live handle and `out` a valid pointer.
enum DdStatus dd_hom_dim(const struct DdKupisch *k,
                         size_t i,
                         size_t len_i,
                         size_t j,
                         size_t len_j,
                         size_t *out);

// Dominant dimension of the endomorphism algebra of the canonical tilting
// module, and whether it equals that of the algebra: 1 yes, 0 no, -1
// undecided within the engine step cap.
//
// # Safety
// `k` must be a live handle; `endo_domdim` and `has` valid pointers.
enum DdStatus dd_property_star(const struct DdKupisch *k,
                               struct DdExtNat *endo_domdim,
                               int32_t *has);

// Full verification report as JSON, for family members up to `m_max`.
// `passed` receives 1 if every check passed.
//
// # Safety
// `out` and `passed` must be valid pointers.
enum DdStatus dd_verify_json(size_t m_max, char **out, int32_t *passed);

// Endomorphism algebra of `eA + Omega^{-index}(A)`.
//
// # Safety
// `k` must be a live handle and `out` a valid pointer.
enum DdStatus dd_endo_tilting(const struct DdKupisch *k, size_t index, struct DdEndo **out);

// Endomorphism algebra of the direct sum of the given modules, written as
// `"M(0,3) M(1,2)"` (whitespace or `+` separated).
//
// # Safety
// `k` must be a live handle, `modules` a valid C string and `out` a valid
// pointer.
enum DdStatus dd_endo_modules(const struct DdKupisch *k, const char *modules, struct DdEndo **out);

// # Safety
// `e` must be null or a live endomorphism handle.
void dd_endo_free(struct DdEndo *e);

// Dimension and number of vertices.
//
// # Safety
// `e` must be a live handle; `dim` and `vertices` valid pointers.
enum DdStatus dd_endo_dims(const struct DdEndo *e, size_t *dim, size_t *vertices);

// Dominant dimension computed by the linear-algebra engine; may be a lower
// bound.
//
// # Safety
// `e` must be a live handle and `out` a valid pointer.
enum DdStatus dd_endo_domdim(const struct DdEndo *e, struct DdExtNat *out);

// Structure constants, summands and basis labels as JSON.
//
// # Safety
// `e` must be a live handle and `out` a valid pointer.
enum DdStatus dd_endo_json(const struct DdEndo *e, char **out);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void dd_string_free(char *s);

// Message of the last failure on this thread; empty if none. Valid until
// the next failing call on this thread.
const char *dd_last_error(void);

// Library version as a static string.
const char *dd_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DOMDIM_H */
