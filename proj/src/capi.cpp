/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "orthosat/orthosat.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <filesystem>
#include <memory>
#include <new>
#include <string>

#include "orthosat/bench.hpp"
#include "orthosat/encode.hpp"
#include "orthosat/error.hpp"
#include "orthosat/generators.hpp"
#include "orthosat/io.hpp"
#include "orthosat/layout.hpp"
#include "orthosat/metrics.hpp"
#include "orthosat/pipeline.hpp"
#include "orthosat/svg.hpp"

struct osat_graph {
  orthosat::Graph graph;
};

struct osat_result {
  orthosat::RunReport report;
  orthosat::Drawing drawing;
  orthosat::MetricsReport metrics;
  orthosat::SvgOptions svg;
  std::size_t dummies_as_bends = 0;
};

namespace {

thread_local std::string last_error;

osat_status to_status(orthosat::ErrorCode c) {
  using orthosat::ErrorCode;
  switch (c) {
  case ErrorCode::InvalidArgument:
    return OSAT_E_INVALID_ARGUMENT;
  case ErrorCode::Parse:
    return OSAT_E_PARSE;
  case ErrorCode::IterationCap:
    return OSAT_E_ITERATION_CAP;
  case ErrorCode::Infeasible:
    return OSAT_E_INFEASIBLE;
  case ErrorCode::Io:
    return OSAT_E_IO;
  case ErrorCode::Internal:
    return OSAT_E_INTERNAL;
  }
  return OSAT_E_INTERNAL;
}

template <class F> osat_status guarded(F &&body) {
  last_error.clear();
  try {
    body();
    return OSAT_OK;
  } catch (const orthosat::Error &e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc &) {
    last_error = "out of memory";
    return OSAT_E_INTERNAL;
  } catch (const std::exception &e) {
    last_error = e.what();
    return OSAT_E_INTERNAL;
  }
}

void require(bool ok, const char *what) {
  if (!ok)
    orthosat::fail(orthosat::ErrorCode::InvalidArgument, what);
}

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::size_t fixture_size(const std::string &name, const std::string &prefix) {
  const std::string tail = name.substr(prefix.size());
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(tail, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (tail.empty() || used != tail.size())
    orthosat::fail(orthosat::ErrorCode::InvalidArgument,
                   "bad fixture size in '" + name + "'");
  return v;
}

orthosat::Graph fixture(const std::string &name) {
  using namespace orthosat;
  const auto starts = [&](const char *p) { return name.rfind(p, 0) == 0; };
  if (name == "c4")
    return cycle_graph(4);
  if (name == "k4")
    return complete_graph(4);
  if (name == "aligned-conflict")
    return aligned_conflict_example().graph;
  if (starts("adversarial-"))
    return adversarial_family(fixture_size(name, "adversarial-")).graph;
  if (starts("cycle-"))
    return cycle_graph(fixture_size(name, "cycle-"));
  if (starts("path-"))
    return path_graph(fixture_size(name, "path-"));
  if (starts("complete-"))
    return complete_graph(fixture_size(name, "complete-"));
  if (starts("star-"))
    return star_graph(fixture_size(name, "star-"));
  fail(ErrorCode::InvalidArgument, "unknown fixture '" + name + "'");
}

} // namespace

extern "C" {

const char *osat_last_error(void) { return last_error.c_str(); }

const char *osat_status_name(osat_status s) {
  switch (s) {
  case OSAT_OK:
    return "ok";
  case OSAT_E_INVALID_ARGUMENT:
    return "invalid argument";
  case OSAT_E_PARSE:
    return "parse error";
  case OSAT_E_ITERATION_CAP:
    return "iteration cap";
  case OSAT_E_INFEASIBLE:
    return "infeasible";
  case OSAT_E_IO:
    return "i/o error";
  case OSAT_E_INTERNAL:
    return "internal error";
  }
  return "unknown status";
}

const char *osat_version(void) { return "0.1.0"; }

void osat_string_free(char *s) { std::free(s); }

osat_status osat_graph_parse(const char *text, osat_graph **out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new osat_graph{orthosat::parse_graph(text)};
  });
}

osat_status osat_graph_read_file(const char *path, osat_graph **out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new osat_graph{orthosat::parse_graph(orthosat::read_file(path))};
  });
}

osat_status osat_graph_generate(uint32_t n, double density, uint64_t seed,
                                osat_graph **out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new osat_graph{orthosat::generate_random_deg4(n, density, seed)};
  });
}

osat_status osat_graph_fixture(const char *name, osat_graph **out) {
  return guarded([&] {
    require(name && out, "null argument");
    *out = new osat_graph{fixture(name)};
  });
}

size_t osat_graph_vertex_count(const osat_graph *g) {
  return g ? g->graph.vertex_count() : 0;
}

size_t osat_graph_edge_count(const osat_graph *g) {
  return g ? g->graph.edge_count() : 0;
}

osat_status osat_graph_edge(const osat_graph *g, size_t e, uint32_t *tail,
                            uint32_t *head) {
  return guarded([&] {
    require(g && tail && head, "null argument");
    require(e < g->graph.edge_count(), "edge index out of range");
    const auto &ed = g->graph.edge(orthosat::eid(e));
    *tail = orthosat::idx(ed.tail);
    *head = orthosat::idx(ed.head);
  });
}

osat_status osat_graph_serialize(const osat_graph *g, const char *format,
                                 char **out) {
  return guarded([&] {
    require(g && format && out, "null argument");
    const std::string f = format;
    if (f == "text")
      *out = dup_string(orthosat::to_edge_list(g->graph));
    else if (f == "gml")
      *out = dup_string(orthosat::to_gml(g->graph));
    else
      orthosat::fail(orthosat::ErrorCode::InvalidArgument,
                     "unknown graph format '" + f + "'");
  });
}

void osat_graph_free(osat_graph *g) { delete g; }

void osat_options_init(osat_options *o) {
  if (!o)
    return;
  const orthosat::SvgOptions svg;
  *o = osat_options{};
  o->svg_unit = svg.unit;
  o->svg_stub_offset = svg.stub_offset;
}

osat_status osat_draw(const osat_graph *g, const osat_options *o,
                      osat_result **out) {
  return guarded([&] {
    require(g && out, "null argument");
    osat_options opts;
    osat_options_init(&opts);
    if (o)
      opts = *o;
    require(opts.svg_unit > 0 && opts.svg_stub_offset >= 0,
            "svg sizes must be positive");
    orthosat::PipelineConfig cfg;
    cfg.solver.seed = opts.seed;
    cfg.max_subdivisions = opts.max_subdivisions;
    cfg.max_cycle_additions = opts.max_cycle_additions;

    auto r = std::make_unique<osat_result>();
    const auto t0 = std::chrono::steady_clock::now();
    r->report = orthosat::run_sm(g->graph, cfg);
    r->drawing = orthosat::draw(r->report.expanded, r->report.orders);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    r->metrics = orthosat::compute_metrics(r->drawing, elapsed);
    r->dummies_as_bends = orthosat::straighten_report(r->drawing).bends.size();
    r->svg.unit = opts.svg_unit;
    r->svg.stub_offset = opts.svg_stub_offset;
    *out = r.release();
  });
}

osat_status osat_result_render(const osat_result *r, osat_part part,
                               char **out) {
  return guarded([&] {
    require(r && out, "null argument");
    std::string s;
    switch (part) {
    case OSAT_PART_DRAWING_JSON:
      s = orthosat::drawing_json(r->drawing);
      break;
    case OSAT_PART_METRICS_JSON:
      s = orthosat::metrics_json(r->metrics);
      break;
    case OSAT_PART_RUN_JSON:
      s = orthosat::run_json(r->report);
      break;
    case OSAT_PART_SVG:
      s = orthosat::to_svg(r->drawing, r->svg);
      break;
    case OSAT_PART_LOG:
      for (const auto &line : r->report.log)
        s += line + "\n";
      break;
    case OSAT_PART_METRICS_CSV:
      s = orthosat::metrics_csv_header() +
          orthosat::metrics_csv_row("drawing", r->metrics);
      break;
    default:
      orthosat::fail(orthosat::ErrorCode::InvalidArgument,
                     "unknown result part");
    }
    *out = dup_string(s);
  });
}

osat_status osat_result_counters(const osat_result *r, osat_counters *out) {
  return guarded([&] {
    require(r && out, "null argument");
    out->cycles_added = r->report.counters.cycles_added;
    out->dummies_added = r->report.counters.dummies_added;
    out->dummies_as_bends = r->dummies_as_bends;
    out->sat_invocations = r->report.counters.sat_invocations;
    out->bends = r->metrics.bends;
    out->crossings = r->metrics.crossings;
    out->area = r->metrics.area;
    out->seconds = r->metrics.time_seconds;
  });
}

void osat_result_free(osat_result *r) { delete r; }

osat_status osat_encode_dimacs(const osat_graph *g, char **out) {
  return guarded([&] {
    require(g && out, "null argument");
    const auto enc =
        orthosat::encode(g->graph, orthosat::cycle_basis(g->graph));
    *out = dup_string(orthosat::to_dimacs(enc));
  });
}

void osat_bench_options_init(osat_bench_options *o) {
  if (!o)
    return;
  *o = osat_bench_options{};
  o->n_min = 20;
  o->n_max = 60;
  o->n_step = 1;
  o->i_min = 1;
  o->i_max = 100;
  o->i_step = 1;
  o->repetitions = 1;
  o->jobs = 1;
  o->record_time = 1;
}

osat_status osat_bench_run(const osat_bench_options *o, const char *out_dir,
                           osat_bench_progress progress, void *user,
                           size_t *failed) {
  return guarded([&] {
    require(o && out_dir, "null argument");
    require(o->n_step > 0 && o->i_step > 0, "range steps must be positive");
    require(o->n_min >= 2 && o->n_min <= o->n_max, "bad vertex range");
    require(o->i_min <= o->i_max, "bad density range");
    require(o->repetitions > 0 && o->jobs > 0,
            "repetitions and jobs must be positive");
    if (!std::filesystem::is_directory(out_dir))
      orthosat::fail(orthosat::ErrorCode::Io, "output directory '" +
                                                  std::string(out_dir) +
                                                  "' does not exist");
    orthosat::BenchConfig cfg;
    for (uint32_t n = o->n_min; n <= o->n_max; n += o->n_step)
      cfg.ns.push_back(n);
    for (uint32_t i = o->i_min; i <= o->i_max; i += o->i_step)
      cfg.grid.push_back(i);
    cfg.repetitions = o->repetitions;
    cfg.seed = o->seed;
    cfg.jobs = o->jobs;
    cfg.record_time = o->record_time != 0;
    cfg.pipeline.solver.seed = o->seed;
    cfg.pipeline.max_subdivisions = o->max_subdivisions;
    cfg.pipeline.max_cycle_additions = o->max_cycle_additions;
    const auto rows = orthosat::run_bench(cfg, [&](const auto &row) {
      if (progress)
        progress(row.instance.c_str(), row.ok ? 1 : 0, row.seconds, user);
    });
    orthosat::write_bench_outputs(rows, out_dir);
    if (failed) {
      *failed = 0;
      for (const auto &r : rows)
        *failed += r.ok ? 0 : 1;
    }
  });
}

osat_status osat_metrics_external(const char *gml, double gap_small,
                                  double gap_column, char **metrics_json) {
  return guarded([&] {
    require(gml && metrics_json, "null argument");
    const auto raw = orthosat::parse_gml_drawing(gml);
    const auto norm =
        orthosat::normalize_external(raw, {gap_small, gap_column});
    const auto m = orthosat::compute_metrics(norm.polylines, norm.points, 0.0);
    *metrics_json = dup_string(orthosat::metrics_json(m));
  });
}

osat_status osat_compare_files(const char *a_csv, const char *b_csv,
                               const char *out_dir) {
  return guarded([&] {
    require(a_csv && b_csv && out_dir, "null argument");
    namespace fs = std::filesystem;
    if (!fs::is_directory(out_dir))
      orthosat::fail(orthosat::ErrorCode::Io, "output directory '" +
                                                  std::string(out_dir) +
                                                  "' does not exist");
    const auto a = orthosat::parse_metrics_csv(orthosat::read_file(a_csv));
    const auto b = orthosat::parse_metrics_csv(orthosat::read_file(b_csv));
    const auto report = orthosat::batch_compare(a, b);
    orthosat::write_file((fs::path(out_dir) / "compare.json").string(),
                         orthosat::compare_json(report));
    for (const auto &m : report.metrics) {
      orthosat::PlotSeries s;
      for (const auto &p : m.pairs) {
        s.x.push_back(p[0]);
        s.y.push_back(p[1]);
      }
      orthosat::write_file(
          (fs::path(out_dir) / ("scatter_" + m.metric + ".svg")).string(),
          orthosat::svg_scatter(m.metric, "A", "B", {s}, true));
    }
  });
}

} // extern "C"
