#ifndef BERNSTIR_H
#define BERNSTIR_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Kinds accepted by [`bernstir_stirling`].
 */
#define BERNSTIR_STIRLING_FIRST 1

#define BERNSTIR_STIRLING_SECOND 2

/**
 * Family selectors: `B` (first kind) and `b` (second kind).
 */
#define BERNSTIR_FAMILY_FIRST 1

#define BERNSTIR_FAMILY_SECOND 2

/**
 * Sign selectors for [`bernstir_verify`].
 */
#define BERNSTIR_SIGN_CORRECTED 0

#define BERNSTIR_SIGN_PAPER 1

/**
 * Status codes. The first four match the CLI's exit codes.
 */
typedef enum BernstirStatus {
  BERNSTIR_STATUS_OK = 0,
  /**
   * An identity sweep found at least one counterexample, or two
   * computation routes disagreed.
   */
  BERNSTIR_STATUS_FALSIFIED = 1,
  BERNSTIR_STATUS_INVALID_ARGUMENT = 2,
  /**
   * A closed-form evaluation hit a vanishing sampled denominator.
   */
  BERNSTIR_STATUS_POLE = 3,
  BERNSTIR_STATUS_NULL_POINTER = 4,
  BERNSTIR_STATUS_INTERNAL = 5,
} BernstirStatus;

/**
 * Error state shared across calls from one thread.
 */
typedef struct BernstirContext BernstirContext;

/**
 * An exact rational number.
 */
typedef struct BernstirRational BernstirRational;

/**
 * Optional overrides for an identity sweep. A negative field keeps the
 * identity's default bound.
 */
typedef struct BernstirGridBounds {
  int64_t max_n;
  int64_t max_k;
  int64_t max_r;
  int64_t max_q;
} BernstirGridBounds;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Allocates a context. Never returns null.
 */
struct BernstirContext *bernstir_context_new(void);

/**
 * # Safety
 * `ctx` must come from [`bernstir_context_new`] and not be used afterwards.
 */
void bernstir_context_free(struct BernstirContext *ctx);

/**
 * Message for the most recent failed call on `ctx`, or null. The pointer
 * is borrowed and stays valid until the next call using `ctx`.
 *
 * # Safety
 * `ctx` must be null or a live context.
 */
const char *bernstir_last_error(const struct BernstirContext *ctx);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void bernstir_string_free(char *s);

/**
 * Parses `a`, `-a`, or `a/b` into a new rational.
 *
 * # Safety
 * `ctx` must be a live context, `text` a NUL-terminated string and `out`
 * writable.
 */
enum BernstirStatus bernstir_rational_parse(struct BernstirContext *ctx,
                                            const char *text,
                                            struct BernstirRational **out);

/**
 * # Safety
 * `r` must be null or a rational returned by this library.
 */
void bernstir_rational_free(struct BernstirRational *r);

/**
 * Reduced numerator as a decimal string (sign included). Null if `r` is
 * null.
 *
 * # Safety
 * `r` must be null or a live rational.
 */
char *bernstir_rational_numerator(const struct BernstirRational *r);

/**
 * Reduced, positive denominator as a decimal string.
 *
 * # Safety
 * `r` must be null or a live rational.
 */
char *bernstir_rational_denominator(const struct BernstirRational *r);

/**
 * `num/den`, or just `num` when the denominator is 1.
 *
 * # Safety
 * `r` must be null or a live rational.
 */
char *bernstir_rational_to_string(const struct BernstirRational *r);

/**
 * r-Stirling number of the given kind (1: unsigned first kind, 2: second
 * kind) as a decimal string.
 *
 * # Safety
 * `ctx` must be a live context and `out` writable.
 */
enum BernstirStatus bernstir_stirling(struct BernstirContext *ctx,
                                      uint32_t kind,
                                      uint64_t n,
                                      uint64_t k,
                                      uint64_t r,
                                      char **out);

/**
 * Value of the order-`alpha` Bernoulli polynomial of degree `n` at the
 * integer `x`, via the closed forms with automatic choice of parameters.
 *
 * # Safety
 * `ctx` must be a live context, `alpha` a live rational, `out` writable.
 */
enum BernstirStatus bernstir_bernoulli(struct BernstirContext *ctx,
                                       uint32_t family_code,
                                       uint64_t n,
                                       const struct BernstirRational *alpha,
                                       int64_t x,
                                       struct BernstirRational **out);

/**
 * Same as [`bernstir_bernoulli`] with explicit sample count `p >= n` and
 * shift `q`. Reports `BERNSTIR_STATUS_POLE` rather than adjusting `q`.
 *
 * # Safety
 * As for [`bernstir_bernoulli`].
 */
enum BernstirStatus bernstir_bernoulli_with(struct BernstirContext *ctx,
                                            uint32_t family_code,
                                            uint64_t n,
                                            const struct BernstirRational *alpha,
                                            int64_t x,
                                            uint64_t p,
                                            uint64_t q,
                                            struct BernstirRational **out);

/**
 * Same value computed by power-series coefficient extraction.
 *
 * # Safety
 * As for [`bernstir_bernoulli`].
 */
enum BernstirStatus bernstir_bernoulli_oracle(struct BernstirContext *ctx,
                                              uint32_t family_code,
                                              uint64_t n,
                                              const struct BernstirRational *alpha,
                                              int64_t x,
                                              struct BernstirRational **out);

/**
 * Sweeps the named identity (e.g. `"c5-first"`) and writes the JSON report
 * to `out_json`. Returns `BERNSTIR_STATUS_FALSIFIED` when the report lists
 * counterexamples; the report is written either way.
 *
 * `bounds` may be null to use the identity's default grid.
 *
 * # Safety
 * `ctx` must be a live context, `identity` a NUL-terminated string,
 * `bounds` null or readable, `out_json` writable.
 */
enum BernstirStatus bernstir_verify(struct BernstirContext *ctx,
                                    const char *identity,
                                    uint32_t sign,
                                    const struct BernstirGridBounds *bounds,
                                    char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BERNSTIR_H */
