/*
 * C interface to the graph manifold complexity library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Strings returned through char** out-parameters
 * are heap allocated and must be released with gmc_string_free. Every
 * function that can fail returns a gmc_status; on failure
 * gmc_last_error() describes the problem (per thread, until the next call).
 */
#ifndef GMC_GMC_H
#define GMC_GMC_H

#include <stddef.h>
#include <stdint.h>

#if defined(GMC_BUILDING_LIBRARY)
#define GMC_API __attribute__((visibility("default")))
#else
#define GMC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gmc_status {
  GMC_OK = 0,
  GMC_INVALID = 1,          /* graph failed validation */
  GMC_PARSE_ERROR = 2,      /* unreadable or malformed document */
  GMC_CAP_EXCEEDED = 3,     /* exhaustive search larger than its cap */
  GMC_ORACLE_MISMATCH = 4,  /* oracle and production path disagree */
  GMC_INAPPLICABLE = 5,     /* requested theorem does not apply */
  GMC_BAD_ARGUMENT = 6,     /* null handle, out-of-range option, ... */
  GMC_OVERFLOW = 7,         /* exact arithmetic left int64 */
  GMC_INTERNAL = 8
} gmc_status;

typedef enum gmc_theorem {
  GMC_THEOREM_AUTO = 0,
  GMC_THEOREM_REGULAR = 1,
  GMC_THEOREM_TREE = 2,
  GMC_THEOREM_GENERAL = 3
} gmc_theorem;

typedef struct gmc_graph gmc_graph;
typedef struct gmc_report gmc_report;

typedef struct gmc_bound_options {
  gmc_theorem theorem;
  uint64_t max_trees;
  uint64_t max_assignments; /* per spanning tree */
} gmc_bound_options;

GMC_API const char* gmc_last_error(void);
GMC_API const char* gmc_status_name(gmc_status status);
GMC_API void gmc_string_free(char* s);

GMC_API gmc_status gmc_graph_parse(const char* text, size_t length, gmc_graph** out);
GMC_API gmc_status gmc_graph_load(const char* path, gmc_graph** out);
GMC_API void gmc_graph_free(gmc_graph* graph);
GMC_API size_t gmc_graph_vertex_count(const gmc_graph* graph);
GMC_API size_t gmc_graph_edge_count(const gmc_graph* graph);
/* 1 when both handles hold identical graphs, 0 otherwise. */
GMC_API int gmc_graph_equal(const gmc_graph* a, const gmc_graph* b);

/* Canonical JSON document. */
GMC_API gmc_status gmc_graph_serialize(const gmc_graph* graph, char** out);

/* GMC_OK or GMC_INVALID; *report receives one line per violation or note
 * ("ok" when valid). */
GMC_API gmc_status gmc_graph_validate(const gmc_graph* graph, char** report);

/* Normalizes every edge matrix, adjusting b parameters. *moves (optional)
 * receives one line per changed edge. */
GMC_API gmc_status gmc_graph_normalize(const gmc_graph* graph, gmc_graph** out, char** moves);

GMC_API void gmc_bound_options_init(gmc_bound_options* options);
GMC_API gmc_status gmc_bound(const gmc_graph* graph, const gmc_bound_options* options,
                             gmc_report** out);
GMC_API void gmc_report_free(gmc_report* report);
GMC_API int64_t gmc_report_total(const gmc_report* report);
GMC_API gmc_theorem gmc_report_theorem(const gmc_report* report);
GMC_API const char* gmc_theorem_name(gmc_theorem theorem);
GMC_API gmc_status gmc_report_to_json(const gmc_report* report, char** out);

/* Oracle checks; GMC_OK on agreement, GMC_ORACLE_MISMATCH otherwise. The
 * text report is written in both cases. */
GMC_API gmc_status gmc_oracle_lemma(int64_t beta_max, char** report);
GMC_API gmc_status gmc_oracle_phi(const gmc_graph* graph, uint64_t max_trees, char** report);
GMC_API gmc_status gmc_oracle_minf(const gmc_graph* graph, const gmc_bound_options* options,
                                   char** report);

#ifdef __cplusplus
}
#endif

#endif /* GMC_GMC_H */
