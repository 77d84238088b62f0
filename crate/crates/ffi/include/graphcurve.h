#ifndef GRAPHCURVE_H
#define GRAPHCURVE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GcStatus {
  GC_STATUS_OK = 0,
  GC_STATUS_NULL_POINTER = 1,
  GC_STATUS_INVALID_ARGUMENT = 2,
  GC_STATUS_INVALID_GRAPH = 3,
  GC_STATUS_NO_CLOSED_FORM = 4,
  GC_STATUS_ORACLE_FAILED = 5,
  GC_STATUS_PANIC = 6,
} GcStatus;

/**
 * Opaque graph handle.
 */
typedef struct GcGraph GcGraph;

/**
 * Opaque Betti table handle.
 */
typedef struct GcTable GcTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *gc_last_error(void);

/**
 * Builds a graph from `edge_count` pairs stored flat in `edges`
 * (`u0, v0, u1, v1, ...`).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (or may be NULL
 * when `edge_count` is 0) and `out` must be writable.
 */
enum GcStatus gc_graph_new(size_t vertex_count,
                           const size_t *edges,
                           size_t edge_count,
                           struct GcGraph **out);

/**
 * Parses a graph from JSON (`{"vertices": d, "edges": [[u, v], ...]}`) or
 * an edge list with one `u v` pair per line.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` must be writable.
 */
enum GcStatus gc_graph_parse(const char *text, struct GcGraph **out);

/**
 * # Safety
 * `g` must be NULL or a handle from this library not yet freed.
 */
void gc_graph_free(struct GcGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle.
 */
size_t gc_graph_vertex_count(const struct GcGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle.
 */
size_t gc_graph_edge_count(const struct GcGraph *g);

/**
 * Writes whether the graph meets every standing assumption.
 *
 * # Safety
 * `g` must be a live graph handle and `valid` writable.
 */
enum GcStatus gc_graph_validate(const struct GcGraph *g, bool *valid);

/**
 * Closed-form Betti table. Fails with `NoClosedForm` for graphs of genus at
 * least two that are not trees of cycles.
 *
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
enum GcStatus gc_formula_table(const struct GcGraph *g, struct GcTable **out);

/**
 * Exact Betti table over F_p. `prime` 0 selects the default (32003).
 *
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
enum GcStatus gc_oracle_table(const struct GcGraph *g,
                              uint64_t prime,
                              uint64_t seed,
                              struct GcTable **out);

/**
 * Ambient dimension `n` of the table's curve.
 *
 * # Safety
 * `t` must be a live table handle.
 */
size_t gc_table_n(const struct GcTable *t);

/**
 * `b_{i,j}`; zero outside the table.
 *
 * # Safety
 * `t` must be a live table handle.
 */
uint64_t gc_table_get(const struct GcTable *t, size_t i, size_t j);

/**
 * Column total `sum_j b_{i,j}`.
 *
 * # Safety
 * `t` must be a live table handle.
 */
uint64_t gc_table_total(const struct GcTable *t, size_t i);

/**
 * Table as JSON; release with [`gc_string_free`]. NULL on failure.
 *
 * # Safety
 * `t` must be a live table handle.
 */
char *gc_table_to_json(const struct GcTable *t);

/**
 * Table in the text layout (zeros as `-`, totals row `T`); release with
 * [`gc_string_free`].
 *
 * # Safety
 * `t` must be a live table handle.
 */
char *gc_table_render(const struct GcTable *t);

/**
 * # Safety
 * `t` must be NULL or a handle from this library not yet freed.
 */
void gc_table_free(struct GcTable *t);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library not yet freed.
 */
void gc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRAPHCURVE_H */
