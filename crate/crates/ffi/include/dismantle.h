/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef DISMANTLE_H
#define DISMANTLE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of a call. `DM_STATUS_NO` is a definite negative answer, not an
 * error.
 */
typedef enum DmStatus {
  DM_STATUS_OK = 0,
  DM_STATUS_NO = 1,
  DM_STATUS_NULL_ARGUMENT = 2,
  DM_STATUS_INVALID_UTF8 = 3,
  DM_STATUS_UNKNOWN_ELEMENT = 4,
  DM_STATUS_SAME_ELEMENT = 5,
  DM_STATUS_PARSE = 6,
  DM_STATUS_VALIDATION = 7,
  DM_STATUS_NOT_DOMINATED = 8,
  DM_STATUS_ILLEGAL_STEP = 9,
  DM_STATUS_STALE_CERTIFICATE = 10,
  DM_STATUS_WRONG_CATEGORY = 11,
  DM_STATUS_BUDGET = 12,
  DM_STATUS_PRECONDITION = 13,
  DM_STATUS_INPUT = 14,
  DM_STATUS_INTERNAL = 15,
  DM_STATUS_PANIC = 16,
} DmStatus;

typedef enum DmMode {
  DM_MODE_STRICT = 0,
  DM_MODE_WEAK = 1,
} DmMode;

typedef struct DmComplex DmComplex;

typedef struct DmGraph DmGraph;

typedef struct DmPoset DmPoset;

/**
 * Limits for the exponential enumerations. A null `const DmBudget *`
 * means the defaults.
 */
typedef struct DmBudget {
  uint64_t max_cliques;
  uint64_t max_morphisms;
  uint64_t max_iso_nodes;
} DmBudget;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

const char *dm_version(void);

/**
 * Message for the last failed call on this thread; empty after success.
 * Valid until the next call into the library on this thread.
 */
const char *dm_last_error(void);

void dm_string_free(char *s);

struct DmBudget dm_budget_default(void);

enum DmStatus dm_graph_parse(const char *text, struct DmGraph **out);

/**
 * Builds a graph from a name such as `P3`, `K4`, `C5°` or `C5o`.
 */
enum DmStatus dm_graph_named(const char *name, struct DmGraph **out);

void dm_graph_free(struct DmGraph *g);

size_t dm_graph_vertex_count(const struct DmGraph *g);

enum DmStatus dm_graph_to_text(const struct DmGraph *g, char **out);

/**
 * Whether `N(x) ⊆ N(a)`.
 */
enum DmStatus dm_graph_dominates(const struct DmGraph *g, const char *a, const char *x, bool *out);

/**
 * Writes `{"core_elements": [...], "certificate": {...}}`.
 */
enum DmStatus dm_graph_core(const struct DmGraph *g, char **out_json);

/**
 * On `DM_STATUS_OK` writes a certificate onto the subgraph induced by the
 * `n` labels in `keep`; `DM_STATUS_NO` means no dismantling exists and
 * leaves `out_json` untouched.
 */
enum DmStatus dm_graph_onto(const struct DmGraph *g,
                            const char *const *keep,
                            size_t n,
                            char **out_json);

/**
 * Same d-homotopy type (isomorphic stiff cores).
 */
enum DmStatus dm_graph_equivalent(const struct DmGraph *g,
                                  const struct DmGraph *h,
                                  const struct DmBudget *budget,
                                  bool *out);

enum DmStatus dm_graph_verify(const struct DmGraph *g, const char *cert_json, size_t *out_step);

/**
 * Applies a functor by name (`comp`, `clique-poset`, `bd`, ...) and writes
 * the image as JSON with its text form and element correspondence.
 */
enum DmStatus dm_graph_functor(const struct DmGraph *g,
                               const char *name,
                               const struct DmBudget *budget,
                               char **out_json);

/**
 * Number of morphisms `G → H` and of cells of the Hom complex.
 */
enum DmStatus dm_hom_counts(const struct DmGraph *g,
                            const struct DmGraph *h,
                            const struct DmBudget *budget,
                            size_t *out_morphisms,
                            size_t *out_cells);

enum DmStatus dm_poset_parse(const char *text, struct DmPoset **out);

void dm_poset_free(struct DmPoset *p);

size_t dm_poset_element_count(const struct DmPoset *p);

enum DmStatus dm_poset_core(const struct DmPoset *p, enum DmMode mode, char **out_json);

/**
 * The certificate's category (`poset` or `poset-weak`) selects the rule.
 */
enum DmStatus dm_poset_verify(const struct DmPoset *p, const char *cert_json, size_t *out_step);

enum DmStatus dm_poset_functor(const struct DmPoset *p,
                               const char *name,
                               const struct DmBudget *budget,
                               char **out_json);

enum DmStatus dm_complex_parse(const char *text, struct DmComplex **out);

void dm_complex_free(struct DmComplex *k);

size_t dm_complex_vertex_count(const struct DmComplex *k);

enum DmStatus dm_complex_core(const struct DmComplex *k, char **out_json);

enum DmStatus dm_complex_verify(const struct DmComplex *k, const char *cert_json, size_t *out_step);

enum DmStatus dm_complex_functor(const struct DmComplex *k,
                                 const char *name,
                                 const struct DmBudget *budget,
                                 char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DISMANTLE_H */
