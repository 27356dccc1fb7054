#ifndef BOOLDIFF_H
#define BOOLDIFF_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stddef.h>
#include <stdint.h>

/**
 * Status code of every fallible call.
 */
typedef enum BdStatus {
  BD_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  BD_STATUS_NULL_POINTER = 1,
  /**
   * Malformed text input.
   */
  BD_STATUS_PARSE = 2,
  /**
   * Operands of different dimensions, or a shape that is not `2^n x 2^n`.
   */
  BD_STATUS_DIMENSION = 3,
  /**
   * `n` above a configured cap.
   */
  BD_STATUS_CAPACITY = 4,
  /**
   * An argument outside its domain, such as `n = 0` for a Jordan matrix.
   */
  BD_STATUS_DOMAIN = 5,
  /**
   * Input text was not valid UTF-8.
   */
  BD_STATUS_UTF8 = 6,
  /**
   * An unexpected internal failure.
   */
  BD_STATUS_INTERNAL = 7,
} BdStatus;

typedef enum BdBasis {
  BD_BASIS_MS = 0,
  BD_BASIS_MD = 1,
  BD_BASIS_XS = 2,
  BD_BASIS_XD = 3,
} BdBasis;

typedef enum BdRoute {
  BD_ROUTE_AUTO = 0,
  BD_ROUTE_DIRECT = 1,
  BD_ROUTE_MATRIX = 2,
} BdRoute;

/**
 * A digraph on `P[n]`.
 */
typedef struct BdDigraph BdDigraph;

/**
 * A Boolean function on `n` variables.
 */
typedef struct BdFunction BdFunction;

/**
 * A square matrix over GF(2).
 */
typedef struct BdMatrix BdMatrix;

/**
 * Image and kernel of an operator, as base-2 logarithms.
 */
typedef struct BdRankProfile {
  size_t rank;
  /**
   * `log2 |image|`, equal to `rank`.
   */
  size_t image_log2;
  /**
   * `log2 |kernel|`, equal to `2^n - rank`.
   */
  size_t kernel_log2;
} BdRankProfile;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failed call on this thread, or `""`.
 * The pointer stays valid until the next call into this library on the
 * same thread.
 */
const char *bd_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` is null or was returned by this library and not yet freed.
 */
void bd_string_free(char *s);

/**
 * Parses the digraph text format (`n`, then one `<c> <d>` edge per line).
 *
 * # Safety
 * `src` is a NUL-terminated string; `out` is writable.
 */
enum BdStatus bd_digraph_parse(const char *src, uint32_t n_max, struct BdDigraph **out);

/**
 * # Safety
 * `g` is null or a live handle from this library.
 */
void bd_digraph_free(struct BdDigraph *g);

/**
 * Canonical text form, released with `bd_string_free`.
 *
 * # Safety
 * `g` is a live handle; `out` is writable.
 */
enum BdStatus bd_digraph_to_string(const struct BdDigraph *g, char **out);

/**
 * # Safety
 * `g` is a live handle; `out` is writable.
 */
enum BdStatus bd_digraph_dimension(const struct BdDigraph *g, uint32_t *out);

/**
 * # Safety
 * `g` is a live handle; `out` is writable.
 */
enum BdStatus bd_digraph_edge_count(const struct BdDigraph *g, size_t *out);

/**
 * Product of `a` and `b` in `basis` (★, ∘, ∗ or • for MS, MD, XS, XD).
 *
 * # Safety
 * `a` and `b` are live handles; `out` is writable.
 */
enum BdStatus bd_product(const struct BdDigraph *a,
                         const struct BdDigraph *b,
                         enum BdBasis basis,
                         enum BdRoute route,
                         struct BdDigraph **out);

/**
 * Rewrites `a` from basis `from` to basis `to`.
 *
 * # Safety
 * `a` is a live handle; `out` is writable.
 */
enum BdStatus bd_convert(const struct BdDigraph *a,
                         enum BdBasis from,
                         enum BdBasis to,
                         struct BdDigraph **out);

/**
 * Card-lex indexed matrix of the operator `a` names in `basis`.
 *
 * # Safety
 * `a` is a live handle; `out` is writable.
 */
enum BdStatus bd_matrix(const struct BdDigraph *a, enum BdBasis basis, struct BdMatrix **out);

/**
 * Digraph, in `basis`, of a `2^n x 2^n` matrix.
 *
 * # Safety
 * `m` is a live handle; `out` is writable.
 */
enum BdStatus bd_digraph_from_matrix(const struct BdMatrix *m,
                                     enum BdBasis basis,
                                     struct BdDigraph **out);

/**
 * Parses the matrix text format (`rows cols`, then one 0/1 row per line).
 *
 * # Safety
 * `src` is a NUL-terminated string; `out` is writable.
 */
enum BdStatus bd_matrix_parse(const char *src, struct BdMatrix **out);

/**
 * # Safety
 * `m` is null or a live handle from this library.
 */
void bd_matrix_free(struct BdMatrix *m);

/**
 * # Safety
 * `m` is a live handle; `out` is writable.
 */
enum BdStatus bd_matrix_to_string(const struct BdMatrix *m, char **out);

/**
 * # Safety
 * `m` is a live handle; `out` is writable.
 */
enum BdStatus bd_matrix_rank(const struct BdMatrix *m, size_t *out);

/**
 * Parses the function text format (`n`, then `2^n` card-lex 0/1 values).
 *
 * # Safety
 * `src` is a NUL-terminated string; `out` is writable.
 */
enum BdStatus bd_function_parse(const char *src, uint32_t n_max, struct BdFunction **out);

/**
 * # Safety
 * `f` is null or a live handle from this library.
 */
void bd_function_free(struct BdFunction *f);

/**
 * # Safety
 * `f` is a live handle; `out` is writable.
 */
enum BdStatus bd_function_to_string(const struct BdFunction *f, char **out);

/**
 * Applies the operator `a` names in `basis` to `f`.
 *
 * # Safety
 * `a` and `f` are live handles; `out` is writable.
 */
enum BdStatus bd_apply(const struct BdDigraph *a,
                       enum BdBasis basis,
                       const struct BdFunction *f,
                       struct BdFunction **out);

/**
 * Rank of the operator, with image and kernel sizes as powers of two.
 *
 * # Safety
 * `a` is a live handle; `out` is writable.
 */
enum BdStatus bd_rank(const struct BdDigraph *a, enum BdBasis basis, struct BdRankProfile *out);

/**
 * The operator as a sum of basis terms, e.g. `m^{}s^{1} + 1`.
 *
 * # Safety
 * `a` is a live handle; `out` is writable.
 */
enum BdStatus bd_format(const struct BdDigraph *a, enum BdBasis basis, char **out);

/**
 * Digraph of the `2^n x 2^n` Jordan-like matrix in `basis`, `n >= 1`.
 *
 * # Safety
 * `out` is writable.
 */
enum BdStatus bd_jordan(uint32_t n, enum BdBasis basis, struct BdDigraph **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BOOLDIFF_H */
