/*
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef ORTHOSAT_ORTHOSAT_H
#define ORTHOSAT_ORTHOSAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define OSAT_API __declspec(dllexport)
#else
#define OSAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum osat_status {
  OSAT_OK = 0,
  OSAT_E_INVALID_ARGUMENT = 1,
  OSAT_E_PARSE = 2,
  OSAT_E_ITERATION_CAP = 3,
  OSAT_E_INFEASIBLE = 4,
  OSAT_E_IO = 5,
  OSAT_E_INTERNAL = 6
} osat_status;

typedef struct osat_graph osat_graph;
typedef struct osat_result osat_result;

/* Message of the last failing call on this thread; "" if none. */
OSAT_API const char *osat_last_error(void);
OSAT_API const char *osat_status_name(osat_status s);
OSAT_API const char *osat_version(void);

/* Strings returned through char** are owned by the caller. */
OSAT_API void osat_string_free(char *s);

/* Graphs. Text is an edge list or GML, detected from the first token. */
OSAT_API osat_status osat_graph_parse(const char *text, osat_graph **out);
OSAT_API osat_status osat_graph_read_file(const char *path, osat_graph **out);
OSAT_API osat_status osat_graph_generate(uint32_t n, double density,
                                         uint64_t seed, osat_graph **out);
/* Names: "c4", "k4", "aligned-conflict", "adversarial-<i>",
   "cycle-<n>", "path-<n>", "complete-<n>", "star-<k>". */
OSAT_API osat_status osat_graph_fixture(const char *name, osat_graph **out);
OSAT_API size_t osat_graph_vertex_count(const osat_graph *g);
OSAT_API size_t osat_graph_edge_count(const osat_graph *g);
OSAT_API osat_status osat_graph_edge(const osat_graph *g, size_t e,
                                     uint32_t *tail, uint32_t *head);
/* format: "text" or "gml" */
OSAT_API osat_status osat_graph_serialize(const osat_graph *g,
                                          const char *format, char **out);
OSAT_API void osat_graph_free(osat_graph *g);

typedef struct osat_options {
  uint64_t seed;
  size_t max_subdivisions;    /* 0: 10 |E| */
  size_t max_cycle_additions; /* 0: 50 |E| */
  double svg_unit;            /* pixels per grid unit */
  double svg_stub_offset;     /* pixels between overlapping box stubs */
} osat_options;

OSAT_API void osat_options_init(osat_options *o);

/* Runs the shape loop, the layout and the metrics. */
OSAT_API osat_status osat_draw(const osat_graph *g, const osat_options *o,
                               osat_result **out);

typedef enum osat_part {
  OSAT_PART_DRAWING_JSON = 0,
  OSAT_PART_METRICS_JSON = 1,
  OSAT_PART_RUN_JSON = 2,
  OSAT_PART_SVG = 3,
  OSAT_PART_LOG = 4,
  OSAT_PART_METRICS_CSV = 5
} osat_part;

OSAT_API osat_status osat_result_render(const osat_result *r, osat_part part,
                                        char **out);

typedef struct osat_counters {
  size_t cycles_added;
  size_t dummies_added;
  size_t dummies_as_bends;
  size_t sat_invocations;
  size_t bends;
  size_t crossings;
  int64_t area;
  double seconds;
} osat_counters;

OSAT_API osat_status osat_result_counters(const osat_result *r,
                                          osat_counters *out);
OSAT_API void osat_result_free(osat_result *r);

/* Encoding of a graph with its cycle basis, as DIMACS with a comment block
   naming the (edge, label) of every variable. */
OSAT_API osat_status osat_encode_dimacs(const osat_graph *g, char **out);

typedef struct osat_bench_options {
  uint32_t n_min, n_max, n_step;
  uint32_t i_min, i_max, i_step; /* density 1.25 + i / 200 */
  uint32_t repetitions;
  uint64_t seed;
  uint32_t jobs;
  int record_time; /* 0 writes zero times, making outputs reproducible */
  size_t max_subdivisions;
  size_t max_cycle_additions;
} osat_bench_options;

OSAT_API void osat_bench_options_init(osat_bench_options *o);
/* Called once per instance, in grid order. */
typedef void (*osat_bench_progress)(const char *instance, int ok,
                                    double seconds, void *user);
/* Writes the bench CSVs and plots into out_dir. failed receives the number
   of instances that did not produce a valid drawing. */
OSAT_API osat_status osat_bench_run(const osat_bench_options *o,
                                    const char *out_dir,
                                    osat_bench_progress progress, void *user,
                                    size_t *failed);

/* Metrics of an external drawing given as GML with coordinates, after grid
   normalization. Returns a JSON object. */
OSAT_API osat_status osat_metrics_external(const char *gml, double gap_small,
                                           double gap_column,
                                           char **metrics_json);
/* Compares two metrics CSV files; writes compare.json and one scatter plot
   per metric into out_dir. */
OSAT_API osat_status osat_compare_files(const char *a_csv, const char *b_csv,
                                        const char *out_dir);

#ifdef __cplusplus
}
#endif

#endif
