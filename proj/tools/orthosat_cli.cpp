/*
 * SPDX-License-Identifier: Apache-2.0
 */
// Command-line front end over the C API.
//
// Exit codes: 0 success, 2 unreadable or malformed input (including bad
// flags), 3 iteration cap reached, 1 anything else.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orthosat/orthosat.h"

namespace {

constexpr int kExitOther = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;

struct CliFailure {
  int code;
};

int exit_code(osat_status s) {
  switch (s) {
  case OSAT_OK:
    return 0;
  case OSAT_E_PARSE:
    return kExitParse;
  case OSAT_E_ITERATION_CAP:
    return kExitCap;
  default:
    return kExitOther;
  }
}

void check(osat_status s) {
  if (s == OSAT_OK)
    return;
  std::cerr << "orthosat: " << osat_status_name(s) << ": " << osat_last_error()
            << "\n";
  throw CliFailure{exit_code(s)};
}

struct GraphDeleter {
  void operator()(osat_graph *g) const { osat_graph_free(g); }
};
struct ResultDeleter {
  void operator()(osat_result *r) const { osat_result_free(r); }
};
using GraphPtr = std::unique_ptr<osat_graph, GraphDeleter>;
using ResultPtr = std::unique_ptr<osat_result, ResultDeleter>;

std::string take(char *s) {
  std::string out = s ? s : "";
  osat_string_free(s);
  return out;
}

void write_text(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) {
    std::cerr << "orthosat: cannot write '" << path << "'\n";
    throw CliFailure{kExitOther};
  }
}

// "a", "a:b" or "a:b:step"
struct Range {
  std::uint32_t lo = 0, hi = 0, step = 1;
};

Range parse_range(const std::string &text, const char *what) {
  Range r;
  std::vector<std::uint32_t> parts;
  std::size_t start = 0;
  for (;;) {
    const auto colon = text.find(':', start);
    const std::string piece = text.substr(start, colon - start);
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(piece, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (piece.empty() || used != piece.size()) {
      std::cerr << "orthosat: bad " << what << " range '" << text << "'\n";
      throw CliFailure{kExitParse};
    }
    parts.push_back(static_cast<std::uint32_t>(v));
    if (colon == std::string::npos)
      break;
    start = colon + 1;
  }
  if (parts.size() > 3 || (parts.size() == 3 && parts[2] == 0)) {
    std::cerr << "orthosat: bad " << what << " range '" << text << "'\n";
    throw CliFailure{kExitParse};
  }
  r.lo = parts[0];
  r.hi = parts.size() > 1 ? parts[1] : parts[0];
  r.step = parts.size() > 2 ? parts[2] : 1;
  return r;
}

GraphPtr load_graph(const std::string &input, const std::string &fixture) {
  osat_graph *g = nullptr;
  if (!fixture.empty()) {
    check(osat_graph_fixture(fixture.c_str(), &g));
    return GraphPtr(g);
  }
  const osat_status s = osat_graph_read_file(input.c_str(), &g);
  if (s == OSAT_E_IO) {
    std::cerr << "orthosat: " << osat_last_error() << "\n";
    throw CliFailure{kExitParse};
  }
  check(s);
  return GraphPtr(g);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Orthogonal graph drawing through SAT-constrained shapes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(osat_version()));

  // draw
  std::string draw_input, draw_fixture, draw_out = ".", draw_dimacs;
  std::vector<std::string> draw_formats{"svg", "json"};
  std::uint64_t draw_seed = 0;
  std::size_t draw_max_sub = 0, draw_max_cycles = 0;
  double svg_unit = 40.0, svg_offset = 3.0;
  bool draw_log = false;
  auto *draw = app.add_subcommand("draw", "Draw one graph");
  auto *draw_src = draw->add_option_group("source");
  draw_src->add_option("input", draw_input, "Edge list or GML file");
  draw_src->add_option("--fixture", draw_fixture,
                       "Built-in graph instead of a file (c4, k4, "
                       "aligned-conflict, adversarial-<i>, cycle-<n>, ...)");
  draw_src->require_option(1);
  draw->add_option("--out", draw_out, "Output directory")
      ->envname("ORTHOSAT_OUT");
  draw->add_option("--format", draw_formats,
                   "Outputs: svg (drawing.svg), json (drawing.json, "
                   "metrics.json, run.json), csv (metrics.csv)")
      ->check(CLI::IsMember({"svg", "json", "csv"}))
      ->delimiter(',')
      ->envname("ORTHOSAT_FORMAT");
  draw->add_option("--seed", draw_seed, "Solver seed")->envname("ORTHOSAT_SEED");
  draw->add_option("--max-subdivisions", draw_max_sub,
                   "Subdivision cap (0: 10 |E|)")
      ->envname("ORTHOSAT_MAX_SUBDIVISIONS");
  draw->add_option("--max-cycle-additions", draw_max_cycles,
                   "Added cycle cap (0: 50 |E|)")
      ->envname("ORTHOSAT_MAX_CYCLE_ADDITIONS");
  draw->add_option("--unit", svg_unit, "SVG pixels per grid unit")
      ->check(CLI::PositiveNumber);
  draw->add_option("--stub-offset", svg_offset,
                   "SVG pixels between overlapping stubs of a box side")
      ->check(CLI::NonNegativeNumber);
  draw->add_option("--dimacs", draw_dimacs,
                   "Also write the initial encoding as DIMACS to this file");
  draw->add_flag("--log", draw_log, "Print the loop events to stderr");

  // gen
  std::uint32_t gen_n = 20;
  double gen_density = 1.5;
  std::uint64_t gen_seed = 0;
  std::string gen_out = "-", gen_format = "text";
  auto *gen = app.add_subcommand("gen", "Generate a random graph of degree "
                                        "at most four");
  gen->add_option("--n", gen_n, "Vertex count")
      ->check(CLI::Range(2u, 1000000u))
      ->envname("ORTHOSAT_N");
  gen->add_option("--density", gen_density, "Edges per vertex, in (0, 2]")
      ->envname("ORTHOSAT_DENSITY");
  gen->add_option("--seed", gen_seed, "Generator seed")
      ->required()
      ->envname("ORTHOSAT_SEED");
  gen->add_option("--out", gen_out, "Output file ('-' for stdout)")
      ->envname("ORTHOSAT_OUT");
  gen->add_option("--format", gen_format, "text or gml")
      ->check(CLI::IsMember({"text", "gml"}));

  // bench
  std::string bench_n = "20:60", bench_grid = "1:100", bench_out;
  std::uint64_t bench_seed = 0;
  std::uint32_t bench_jobs = 1, bench_reps = 1;
  std::size_t bench_max_sub = 0, bench_max_cycles = 0;
  bool bench_no_time = false, bench_quiet = false;
  auto *bench = app.add_subcommand(
      "bench", "Run the random-graph grid and write CSVs and CDF plots");
  bench->add_option("--n", bench_n, "Vertex counts, lo:hi[:step]")
      ->envname("ORTHOSAT_N");
  bench->add_option("--density", bench_grid,
                    "Density indices lo:hi[:step]; index i means "
                    "1.25 + i/200 edges per vertex")
      ->envname("ORTHOSAT_DENSITY");
  bench->add_option("--seed", bench_seed, "Base seed")
      ->required()
      ->envname("ORTHOSAT_SEED");
  bench->add_option("--out", bench_out, "Output directory (created)")
      ->required()
      ->envname("ORTHOSAT_OUT");
  bench->add_option("--jobs", bench_jobs, "Worker threads")
      ->check(CLI::Range(1u, 1024u))
      ->envname("ORTHOSAT_JOBS");
  bench->add_option("--repetitions", bench_reps, "Graphs per grid cell")
      ->check(CLI::Range(1u, 100000u));
  bench->add_option("--max-subdivisions", bench_max_sub,
                    "Subdivision cap (0: 10 |E|)")
      ->envname("ORTHOSAT_MAX_SUBDIVISIONS");
  bench->add_option("--max-cycle-additions", bench_max_cycles,
                    "Added cycle cap (0: 50 |E|)")
      ->envname("ORTHOSAT_MAX_CYCLE_ADDITIONS");
  bench->add_flag("--no-time", bench_no_time,
                  "Write 0 for all times so that runs are byte-identical");
  bench->add_flag("--quiet", bench_quiet, "No per-instance progress");

  // metrics
  std::string metrics_drawing, metrics_out = "-";
  std::vector<std::string> metrics_compare;
  double gap_small = 8.0, gap_column = 15.0;
  auto *metrics = app.add_subcommand(
      "metrics", "Metrics of an external drawing, or compare two CSVs");
  auto *metrics_mode = metrics->add_option_group("mode");
  metrics_mode->add_option("--drawing", metrics_drawing,
                           "GML drawing with coordinates");
  metrics_mode->add_option("--compare", metrics_compare,
                           "Two metrics CSV files A B")
      ->expected(2);
  metrics_mode->require_option(1);
  metrics->add_option("--gap-small", gap_small,
                      "Gaps up to this stay on one grid line")
      ->envname("ORTHOSAT_GAP_SMALL");
  metrics->add_option("--gap-column", gap_column,
                      "Gaps from this start a new grid line")
      ->envname("ORTHOSAT_GAP_COLUMN");
  metrics->add_option("--out", metrics_out,
                      "Output file for --drawing, directory for --compare")
      ->envname("ORTHOSAT_OUT");

  // fixtures
  std::string fixture_name, fixture_out = "-", fixture_format = "text";
  bool fixture_list = false;
  auto *fixtures = app.add_subcommand("fixtures", "Write a built-in graph");
  fixtures->add_option("name", fixture_name, "Fixture name");
  fixtures->add_flag("--list", fixture_list, "List the fixture names");
  fixtures->add_option("--out", fixture_out, "Output file ('-' for stdout)");
  fixtures->add_option("--format", fixture_format, "text or gml")
      ->check(CLI::IsMember({"text", "gml"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*draw) {
      GraphPtr g = load_graph(draw_input, draw_fixture);
      if (!draw_dimacs.empty()) {
        char *text = nullptr;
        check(osat_encode_dimacs(g.get(), &text));
        write_text(draw_dimacs, take(text));
      }
      osat_options opt;
      osat_options_init(&opt);
      opt.seed = draw_seed;
      opt.max_subdivisions = draw_max_sub;
      opt.max_cycle_additions = draw_max_cycles;
      opt.svg_unit = svg_unit;
      opt.svg_stub_offset = svg_offset;
      osat_result *raw = nullptr;
      check(osat_draw(g.get(), &opt, &raw));
      ResultPtr r(raw);
      std::filesystem::create_directories(draw_out);
      const auto path = [&](const char *name) {
        return (std::filesystem::path(draw_out) / name).string();
      };
      const auto render = [&](osat_part part) {
        char *text = nullptr;
        check(osat_result_render(r.get(), part, &text));
        return take(text);
      };
      for (const auto &f : draw_formats) {
        if (f == "svg") {
          write_text(path("drawing.svg"), render(OSAT_PART_SVG));
        } else if (f == "json") {
          write_text(path("drawing.json"), render(OSAT_PART_DRAWING_JSON));
          write_text(path("metrics.json"), render(OSAT_PART_METRICS_JSON));
          write_text(path("run.json"), render(OSAT_PART_RUN_JSON));
        } else {
          write_text(path("metrics.csv"), render(OSAT_PART_METRICS_CSV));
        }
      }
      if (draw_log)
        std::cerr << render(OSAT_PART_LOG);
      osat_counters c{};
      check(osat_result_counters(r.get(), &c));
      std::printf("dummies=%zu bends=%zu crossings=%zu area=%lld "
                  "sat_invocations=%zu cycles_added=%zu\n",
                  c.dummies_added, c.bends, c.crossings,
                  static_cast<long long>(c.area), c.sat_invocations,
                  c.cycles_added);
    } else if (*gen) {
      osat_graph *raw = nullptr;
      check(osat_graph_generate(gen_n, gen_density, gen_seed, &raw));
      GraphPtr g(raw);
      char *text = nullptr;
      check(osat_graph_serialize(g.get(), gen_format.c_str(), &text));
      write_text(gen_out, take(text));
    } else if (*bench) {
      const Range n = parse_range(bench_n, "vertex");
      const Range grid = parse_range(bench_grid, "density");
      osat_bench_options o;
      osat_bench_options_init(&o);
      o.n_min = n.lo;
      o.n_max = n.hi;
      o.n_step = n.step;
      o.i_min = grid.lo;
      o.i_max = grid.hi;
      o.i_step = grid.step;
      o.repetitions = bench_reps;
      o.seed = bench_seed;
      o.jobs = bench_jobs;
      o.record_time = bench_no_time ? 0 : 1;
      o.max_subdivisions = bench_max_sub;
      o.max_cycle_additions = bench_max_cycles;
      std::error_code ec;
      std::filesystem::create_directories(bench_out, ec);
      const auto progress = [](const char *instance, int ok, double seconds,
                               void *user) {
        if (*static_cast<bool *>(user))
          return;
        std::fprintf(stderr, "%s %s %.3fs\n", instance, ok ? "ok" : "FAILED",
                     seconds);
      };
      std::size_t failed = 0;
      check(osat_bench_run(&o, bench_out.c_str(), progress, &bench_quiet,
                           &failed));
      if (failed) {
        std::cerr << "orthosat: " << failed << " instances failed\n";
        return kExitOther;
      }
    } else if (*metrics) {
      if (!metrics_drawing.empty()) {
        std::ifstream in(metrics_drawing, std::ios::binary);
        if (!in) {
          std::cerr << "orthosat: cannot open '" << metrics_drawing << "'\n";
          return kExitParse;
        }
        const std::string gml((std::istreambuf_iterator<char>(in)),
                              std::istreambuf_iterator<char>());
        char *json = nullptr;
        check(osat_metrics_external(gml.c_str(), gap_small, gap_column,
                                    &json));
        write_text(metrics_out, take(json));
      } else {
        const std::string dir = metrics_out == "-" ? "." : metrics_out;
        std::filesystem::create_directories(dir);
        check(osat_compare_files(metrics_compare[0].c_str(),
                                 metrics_compare[1].c_str(), dir.c_str()));
      }
    } else if (*fixtures) {
      if (fixture_list) {
        std::cout << "c4\nk4\naligned-conflict\nadversarial-<i>\ncycle-<n>\n"
                     "path-<n>\ncomplete-<n>\nstar-<k>\n";
        return 0;
      }
      if (fixture_name.empty()) {
        std::cerr << "orthosat: fixtures needs a name or --list\n";
        return kExitParse;
      }
      GraphPtr g = load_graph("", fixture_name);
      char *text = nullptr;
      check(osat_graph_serialize(g.get(), fixture_format.c_str(), &text));
      write_text(fixture_out, take(text));
    }
  } catch (const CliFailure &f) {
    return f.code;
  } catch (const std::exception &e) {
    std::cerr << "orthosat: " << e.what() << "\n";
    return kExitOther;
  }
  return 0;
}
