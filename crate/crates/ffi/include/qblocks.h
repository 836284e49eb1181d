#ifndef QBLOCKS_H
#define QBLOCKS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum QbStatus {
  QB_STATUS_OK = 0,
  /**
   * The input is well formed but violates a mathematical precondition.
   */
  QB_STATUS_DOMAIN = 1,
  /**
   * Malformed input: a literal failed to parse or an argument is out of range.
   */
  QB_STATUS_USAGE = 2,
  /**
   * A resource guard refused the computation.
   */
  QB_STATUS_RESOURCE = 3,
  /**
   * A required pointer was null.
   */
  QB_STATUS_NULL_POINTER = 4,
  /**
   * An internal panic was caught at the boundary.
   */
  QB_STATUS_INTERNAL = 5,
} QbStatus;

/**
 * An element of the lattice `Q` for a fixed modulus.
 */
typedef struct QbBlock QbBlock;

/**
 * A partition.
 */
typedef struct QbPartition QbPartition;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until the
 * next call on the same thread.
 */
const char *qb_last_error(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void qb_string_free(char *s);

/**
 * Library version, static storage.
 */
const char *qb_version(void);

/**
 * Parses `"4,3,3,1"` (`"-"` for the empty partition).
 *
 * # Safety
 * `literal` must be a NUL-terminated string; `out` must be writable.
 */
enum QbStatus qb_partition_parse(const char *literal, struct QbPartition **out);

/**
 * # Safety
 * `p` must be NULL or a live handle from this library.
 */
void qb_partition_free(struct QbPartition *p);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum QbStatus qb_partition_to_string(const struct QbPartition *p, char **out);

/**
 * `|λ|`, or -1 for NULL.
 *
 * # Safety
 * `p` must be NULL or a live handle.
 */
int64_t qb_partition_size(const struct QbPartition *p);

/**
 * The `e`-core of `p`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum QbStatus qb_e_core(const struct QbPartition *p, uint32_t e, struct QbPartition **out);

/**
 * The `e`-quotient at charge `s`, as `"-|-|1"`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum QbStatus qb_e_quotient(const struct QbPartition *p, int64_t s, uint32_t e, char **out);

/**
 * The `e`-weight of `p`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum QbStatus qb_e_weight(const struct QbPartition *p, uint32_t e, int64_t *out);

/**
 * `σλ` for the shift by `ehat` at charge 0.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum QbStatus qb_sigma_partition(const struct QbPartition *p,
                                 uint32_t e,
                                 uint32_t ehat,
                                 struct QbPartition **out);

/**
 * Parses a block literal for modulus `e`: `"3,5,3"`, or `"i:c,…"` when `e = 0`.
 *
 * # Safety
 * `literal` must be a NUL-terminated string; `out` must be writable.
 */
enum QbStatus qb_block_parse(uint32_t e, const char *literal, struct QbBlock **out);

/**
 * The residue counts `α^s(λ)`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum QbStatus qb_block_of_partition(const struct QbPartition *p,
                                    int64_t s,
                                    uint32_t e,
                                    struct QbBlock **out);

/**
 * # Safety
 * `b` must be NULL or a live handle from this library.
 */
void qb_block_free(struct QbBlock *b);

/**
 * # Safety
 * `b` must be a live handle; `out` must be writable.
 */
enum QbStatus qb_block_to_string(const struct QbBlock *b, char **out);

/**
 * `w^S(α)` for the multicharge `charges[0..r]`.
 *
 * # Safety
 * `b` must be a live handle; `charges` must point to `r` integers.
 */
enum QbStatus qb_block_weight(const struct QbBlock *b,
                              const int64_t *charges_,
                              size_t r,
                              int64_t *out);

/**
 * `α ∈ Q^S_+`.
 *
 * # Safety
 * `b` must be a live handle; `charges` must point to `r` integers.
 */
enum QbStatus qb_is_block(const struct QbBlock *b, const int64_t *charges_, size_t r, bool *out);

/**
 * `α` is a core block for `S`.
 *
 * # Safety
 * `b` must be a live handle; `charges` must point to `r` integers.
 */
enum QbStatus qb_is_core_block(const struct QbBlock *b,
                               const int64_t *charges_,
                               size_t r,
                               bool *out);

/**
 * `σα`.
 *
 * # Safety
 * `b` must be a live handle; `out` must be writable.
 */
enum QbStatus qb_sigma_block(const struct QbBlock *b, uint32_t ehat, struct QbBlock **out);

/**
 * `N(r,e)` by exhaustive search over equal-size subsets.
 *
 * # Safety
 * `out` must be writable.
 */
enum QbStatus qb_n_exact(size_t r, uint32_t e, int64_t *out);

/**
 * The closed form of `N(r,e)`; `*known` is false where none is available.
 *
 * # Safety
 * `out` and `known` must be writable.
 */
enum QbStatus qb_n_closed_form(size_t r, uint32_t e, int64_t *out, bool *known);

/**
 * Lower and upper bounds on `N(r,e)`, `r, e ≥ 2`.
 *
 * # Safety
 * `lower` and `upper` must be writable.
 */
enum QbStatus qb_n_bounds(size_t r, uint32_t e, int64_t *lower, int64_t *upper);

/**
 * Runs a verification suite (or `"all"`) at the default scale.
 *
 * # Safety
 * `suite` must be a NUL-terminated string; `passed` must be writable.
 */
enum QbStatus qb_verify(const char *suite, bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QBLOCKS_H */
