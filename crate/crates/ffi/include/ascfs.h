#ifndef ASCFS_H
#define ASCFS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum AscfsCoxeterLabel {
  ASCFS_COXETER_LABEL_THICK_OF_ORDER_EXACTLY1 = 0,
  ASCFS_COXETER_LABEL_NONTRIVIAL_JOIN = 1,
  ASCFS_COXETER_LABEL_INCONCLUSIVE = 2,
} AscfsCoxeterLabel;

typedef enum AscfsStatus {
  ASCFS_STATUS_OK = 0,
  ASCFS_STATUS_NULL_POINTER = 1,
  ASCFS_STATUS_INVALID_INPUT = 2,
  ASCFS_STATUS_PARSE = 3,
  ASCFS_STATUS_RESOURCE = 4,
  ASCFS_STATUS_DOMAIN = 5,
  ASCFS_STATUS_UTF8 = 6,
  ASCFS_STATUS_PANIC = 7,
} AscfsStatus;

typedef enum AscfsThresholdKind {
  ASCFS_THRESHOLD_KIND_CONNECTIVITY = 0,
  ASCFS_THRESHOLD_KIND_AS = 1,
  ASCFS_THRESHOLD_KIND_CFS_UPPER = 2,
  ASCFS_THRESHOLD_KIND_CFS_LOWER = 3,
  ASCFS_THRESHOLD_KIND_CFS_CONJECTURED = 4,
} AscfsThresholdKind;

/**
 * Opaque graph handle.
 */
typedef struct AscfsGraph AscfsGraph;

/**
 * Result of the AS decider. `end_a`/`end_b` are meaningful only when
 * `verdict` is true.
 */
typedef struct AscfsAsReport {
  bool verdict;
  uint64_t blocks_examined;
  size_t end_a;
  size_t end_b;
  size_t core_size;
} AscfsAsReport;

/**
 * Result of the CFS decider. `support_size` is the size of the covering
 * component (0 when `verdict` is false).
 */
typedef struct AscfsCfsReport {
  bool verdict;
  size_t clique_factor_size;
  size_t support_size;
} AscfsCfsReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *ascfs_last_error_message(void);

/**
 * Samples G(n, p) with the given seed.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum AscfsStatus ascfs_graph_generate(size_t n, double p, uint64_t seed, struct AscfsGraph **out);

/**
 * Parses the `n m` / `u v` text format.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum AscfsStatus ascfs_graph_parse(const char *text, struct AscfsGraph **out);

/**
 * Builds a graph from `m` edges given as `2m` consecutive endpoints.
 *
 * # Safety
 * `endpoints` must point to `2 * m` readable values (may be null when
 * `m == 0`); `out` must be writable.
 */
enum AscfsStatus ascfs_graph_from_edges(size_t n,
                                        const size_t *endpoints,
                                        size_t m,
                                        struct AscfsGraph **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `g` must be null or a handle from this library not yet freed.
 */
void ascfs_graph_free(struct AscfsGraph *g);

/**
 * Vertex count; 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t ascfs_graph_vertex_count(const struct AscfsGraph *g);

/**
 * Edge count; 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t ascfs_graph_edge_count(const struct AscfsGraph *g);

/**
 * Serializes a graph in canonical text form. Free the string with
 * [`ascfs_string_free`].
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum AscfsStatus ascfs_graph_write(const struct AscfsGraph *g, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void ascfs_string_free(char *s);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum AscfsStatus ascfs_is_as(const struct AscfsGraph *g, struct AscfsAsReport *out);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum AscfsStatus ascfs_is_cfs(const struct AscfsGraph *g, struct AscfsCfsReport *out);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum AscfsStatus ascfs_largest_support_fraction(const struct AscfsGraph *g, double *out);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum AscfsStatus ascfs_is_nontrivial_join(const struct AscfsGraph *g, bool *out);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum AscfsStatus ascfs_coxeter_label(const struct AscfsGraph *g, enum AscfsCoxeterLabel *out);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum AscfsStatus ascfs_contains_clique_of_order(const struct AscfsGraph *g, size_t t, bool *out);

/**
 * # Safety
 * `out` must be writable.
 */
enum AscfsStatus ascfs_threshold(enum AscfsThresholdKind kind, size_t n, double *out);

/**
 * # Safety
 * `lo` and `hi` must be writable.
 */
enum AscfsStatus ascfs_wilson_interval(uint64_t successes,
                                       uint64_t trials,
                                       double confidence,
                                       double *lo,
                                       double *hi);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ASCFS_H */
