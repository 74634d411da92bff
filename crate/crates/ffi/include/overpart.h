#ifndef OVERPART_H
#define OVERPART_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum OpStatus {
  OP_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  OP_STATUS_NULL_ARGUMENT = 1,
  /**
   * Input text was not valid UTF-8.
   */
  OP_STATUS_INVALID_UTF8 = 2,
  /**
   * Input text did not follow the expected notation.
   */
  OP_STATUS_PARSE = 3,
  /**
   * Input was well-formed but outside the operation's domain.
   */
  OP_STATUS_DOMAIN = 4,
  /**
   * A result does not fit the output type.
   */
  OP_STATUS_OVERFLOW = 5,
  /**
   * A resource limit such as the prime table bound was reached.
   */
  OP_STATUS_LIMIT = 6,
  /**
   * The library panicked; this is a bug.
   */
  OP_STATUS_PANIC = 7,
} OpStatus;

/**
 * Opaque overpartition handle.
 */
typedef struct OpOverpartition OpOverpartition;

/**
 * Opaque subgroup descriptor handle.
 */
typedef struct OpSubgroup OpSubgroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call into this library on the same thread.
 */
const char *overpart_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string produced by this library and not yet freed.
 */
void overpart_string_free(char *s);

/**
 * Parses `<1^2 2^-3>` notation or an overline list such as `~3,2,2,1`.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` writable.
 */
enum OpStatus overpart_parse(const char *text, struct OpOverpartition **out);

/**
 * Builds an overpartition from parallel arrays of parts and signed multiplicities.
 *
 * # Safety
 * `parts` and `multiplicities` must each point to `len` readable elements
 * (either may be null when `len` is 0) and `out` must be writable.
 */
enum OpStatus overpart_from_multiplicities(const uint32_t *parts,
                                           const int64_t *multiplicities,
                                           size_t len,
                                           struct OpOverpartition **out);

/**
 * Releases an overpartition handle. Null is ignored.
 *
 * # Safety
 * `a` must be null or a handle from this library that has not been freed.
 */
void overpart_free(struct OpOverpartition *a);

/**
 * Canonical `<...>` text.
 *
 * # Safety
 * `a` must be a live handle and `out` writable.
 */
enum OpStatus overpart_format(const struct OpOverpartition *a, char **out);

/**
 * Group product `a·b`.
 *
 * # Safety
 * `a` and `b` must be live handles and `out` writable.
 */
enum OpStatus overpart_multiply(const struct OpOverpartition *a,
                                const struct OpOverpartition *b,
                                struct OpOverpartition **out);

/**
 * Group inverse.
 *
 * # Safety
 * `a` must be a live handle and `out` writable.
 */
enum OpStatus overpart_inverse(const struct OpOverpartition *a, struct OpOverpartition **out);

/**
 * Structural equality. Null handles compare unequal to everything.
 *
 * # Safety
 * Each argument must be null or a live handle.
 */
bool overpart_equal(const struct OpOverpartition *a, const struct OpOverpartition *b);

/**
 * Signed multiplicity of `part`; 0 when absent or when `a` is null.
 *
 * # Safety
 * `a` must be null or a live handle.
 */
int64_t overpart_multiplicity(const struct OpOverpartition *a, uint32_t part);

/**
 * `Σ i·μ_i`. Fails with `Overflow` outside the `int64_t` range.
 *
 * # Safety
 * `a` must be a live handle and `out` writable.
 */
enum OpStatus overpart_oversize(const struct OpOverpartition *a, int64_t *out);

/**
 * `Σ μ_i`. Fails with `Overflow` outside the `int64_t` range.
 *
 * # Safety
 * `a` must be a live handle and `out` writable.
 */
enum OpStatus overpart_overlength(const struct OpOverpartition *a, int64_t *out);

/**
 * `∏ i^{μ_i}` as `num/den` text.
 *
 * # Safety
 * `a` must be a live handle and `out` writable.
 */
enum OpStatus overpart_overnorm(const struct OpOverpartition *a, char **out);

/**
 * Supernorm `∏ p_i^{μ_i}` as `num/den` text (`num` alone when the denominator is 1).
 *
 * # Safety
 * `a` must be a live handle and `out` writable.
 */
enum OpStatus overpart_supernorm(const struct OpOverpartition *a, char **out);

/**
 * Inverse supernorm of a positive rational written `num/den` or `num`.
 *
 * # Safety
 * `rational` must be a valid NUL-terminated string and `out` writable.
 */
enum OpStatus overpart_factor(const char *rational, struct OpOverpartition **out);

/**
 * Parses a subgroup descriptor such as `{"kind":"parts-in","S":[1,3]}`.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string and `out` writable.
 */
enum OpStatus overpart_subgroup_parse(const char *json, struct OpSubgroup **out);

/**
 * Releases a subgroup handle. Null is ignored.
 *
 * # Safety
 * `g` must be null or a handle from this library that has not been freed.
 */
void overpart_subgroup_free(struct OpSubgroup *g);

/**
 * Whether `a` lies in `g`.
 *
 * # Safety
 * `a`, `g` must be live handles and `out` writable.
 */
enum OpStatus overpart_is_member(const struct OpOverpartition *a,
                                 const struct OpSubgroup *g,
                                 bool *out);

/**
 * Whether `a` and `b` lie in the same coset of `g`.
 *
 * # Safety
 * `a`, `b`, `g` must be live handles and `out` writable.
 */
enum OpStatus overpart_same_coset(const struct OpOverpartition *a,
                                  const struct OpOverpartition *b,
                                  const struct OpSubgroup *g,
                                  bool *out);

/**
 * Image of `a` in the quotient by `g`, as JSON such as `{"type":"integer","value":5}`.
 *
 * # Safety
 * `a`, `g` must be live handles and `out` writable.
 */
enum OpStatus overpart_quotient_image(const struct OpOverpartition *a,
                                      const struct OpSubgroup *g,
                                      char **out);

/**
 * `p(n)` as decimal text.
 *
 * # Safety
 * `out` must be writable.
 */
enum OpStatus overpart_partition_count(uint32_t n, char **out);

/**
 * Number of ordered pairs of partitions of `n` with disjoint part sets, from
 * the pentagonal sum of squared partition counts, as decimal text.
 *
 * # Safety
 * `out` must be writable.
 */
enum OpStatus overpart_size_kernel_pairs(uint32_t n, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OVERPART_H */
