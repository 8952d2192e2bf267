/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "orthosat/bench.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <filesystem>
#include <mutex>
#include <thread>

#include "orthosat/error.hpp"
#include "orthosat/generators.hpp"
#include "orthosat/io.hpp"
#include "orthosat/layout.hpp"
#include "orthosat/svg.hpp"

namespace orthosat {

double grid_density(std::size_t i) {
  return 1.25 + static_cast<double>(i) / 200.0;
}

std::size_t grid_edge_count(std::size_t n, std::size_t i) {
  return n * (250 + i) / 200;
}

std::uint64_t instance_seed(std::uint64_t base, std::size_t n, std::size_t i,
                            std::size_t repetition) {
  const auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t s = mix(base);
  s = mix(s ^ static_cast<std::uint64_t>(n));
  s = mix(s ^ static_cast<std::uint64_t>(i));
  return mix(s ^ static_cast<std::uint64_t>(repetition));
}

BenchRow run_instance(std::size_t n, std::size_t i, std::size_t repetition,
                      const BenchConfig &cfg) {
  BenchRow row;
  row.n = n;
  row.i = i;
  row.repetition = repetition;
  row.instance = "n" + std::to_string(n) + "_i" + std::to_string(i) + "_r" +
                 std::to_string(repetition);
  row.edges = grid_edge_count(n, i);
  row.seed = instance_seed(cfg.seed, n, i, repetition);
  try {
    const Graph g = generate_random_deg4_edges(n, row.edges, row.seed);
    const auto t0 = std::chrono::steady_clock::now();
    const RunReport r = run_sm(g, cfg.pipeline);
    const Drawing d = draw(r.expanded, r.orders);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    row.seconds = cfg.record_time ? elapsed : 0.0;
    row.metrics = compute_metrics(d, row.seconds);
    row.violations = drawing_violations(d).size();
    row.counters = r.counters;
    const auto s = straighten_report(d);
    row.dummies_as_bends = s.bends.size();
    row.dummies_straight = s.straight.size();
    row.invocations = r.formula_sizes.size();
    for (const auto &f : r.formula_sizes) {
      row.mean_variables += static_cast<double>(f.variables);
      row.mean_clauses += static_cast<double>(f.clauses);
    }
    if (row.invocations) {
      row.mean_variables /= static_cast<double>(row.invocations);
      row.mean_clauses /= static_cast<double>(row.invocations);
    }
    row.ok = row.violations == 0;
    if (!row.ok)
      row.error = "drawing violates " + std::to_string(row.violations) +
                  " grid rules";
  } catch (const Error &e) {
    row.error = std::string(error_code_name(e.code())) + ": " + e.what();
  }
  return row;
}

std::vector<BenchRow>
run_bench(const BenchConfig &cfg,
          const std::function<void(const BenchRow &)> &on_row) {
  struct Task {
    std::size_t n, i, rep;
  };
  std::vector<Task> tasks;
  for (auto n : cfg.ns)
    for (auto i : cfg.grid)
      for (std::size_t r = 0; r < cfg.repetitions; ++r)
        tasks.push_back({n, i, r});

  std::vector<BenchRow> rows(tasks.size());
  if (cfg.jobs <= 1) {
    for (std::size_t k = 0; k < tasks.size(); ++k) {
      rows[k] = run_instance(tasks[k].n, tasks[k].i, tasks[k].rep, cfg);
      if (on_row)
        on_row(rows[k]);
    }
    return rows;
  }

  std::vector<char> done(tasks.size(), 0);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= tasks.size())
        return;
      BenchRow row = run_instance(tasks[k].n, tasks[k].i, tasks[k].rep, cfg);
      {
        std::lock_guard<std::mutex> lock(mu);
        rows[k] = std::move(row);
        done[k] = 1;
      }
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  const unsigned workers =
      std::min<unsigned>(cfg.jobs, static_cast<unsigned>(tasks.size()));
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back(worker);
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    std::unique_lock<std::mutex> lock(mu);
    cv.wait(lock, [&] { return done[k] != 0; });
    lock.unlock();
    if (on_row)
      on_row(rows[k]);
  }
  for (auto &t : pool)
    t.join();
  return rows;
}

namespace {

std::string fixed(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

} // namespace

std::string internals_csv(const std::vector<BenchRow> &rows) {
  std::string out = "instance,n,i,edges,seed,ok,cycles_added,dummies,"
                    "dummies_as_bends,sat_invocations,seconds\n";
  for (const auto &r : rows)
    out += r.instance + "," + std::to_string(r.n) + "," +
           std::to_string(r.i) + "," + std::to_string(r.edges) + "," +
           std::to_string(r.seed) + "," + (r.ok ? "1" : "0") + "," +
           std::to_string(r.counters.cycles_added) + "," +
           std::to_string(r.counters.dummies_added) + "," +
           std::to_string(r.dummies_as_bends) + "," +
           std::to_string(r.counters.sat_invocations) + "," +
           fixed(r.seconds) + "\n";
  return out;
}

std::string formula_csv(const std::vector<BenchRow> &rows) {
  std::string out = "instance,sat_invocations,mean_variables,mean_clauses\n";
  for (const auto &r : rows)
    out += r.instance + "," + std::to_string(r.invocations) + "," +
           fixed(r.mean_variables) + "," + fixed(r.mean_clauses) + "\n";
  return out;
}

std::string bench_metrics_csv(const std::vector<BenchRow> &rows) {
  std::string out = metrics_csv_header();
  for (const auto &r : rows)
    if (r.ok)
      out += metrics_csv_row(r.instance, r.metrics);
  return out;
}

void write_bench_outputs(const std::vector<BenchRow> &rows,
                         const std::string &dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    fail(ErrorCode::Io, "output directory '" + dir + "' does not exist");
  const auto path = [&](const char *name) {
    return (fs::path(dir) / name).string();
  };
  write_file(path("metrics.csv"), bench_metrics_csv(rows));
  write_file(path("internals.csv"), internals_csv(rows));
  write_file(path("formula.csv"), formula_csv(rows));

  std::vector<double> cycles, dummies, bends, calls, seconds;
  for (const auto &r : rows) {
    if (!r.ok)
      continue;
    cycles.push_back(static_cast<double>(r.counters.cycles_added));
    dummies.push_back(static_cast<double>(r.counters.dummies_added));
    bends.push_back(static_cast<double>(r.dummies_as_bends));
    calls.push_back(static_cast<double>(r.counters.sat_invocations));
    seconds.push_back(r.seconds);
  }
  write_file(path("cdf_cycles_added.svg"),
             svg_cdf("Cycles added", "cycles added", cycles));
  write_file(path("cdf_dummies.svg"),
             svg_cdf("Dummy vertices", "dummies", dummies));
  write_file(path("cdf_dummies_as_bends.svg"),
             svg_cdf("Dummies drawn as bends", "bends", bends));
  write_file(path("cdf_sat_invocations.svg"),
             svg_cdf("SAT invocations", "invocations", calls));
  write_file(path("cdf_seconds.svg"),
             svg_cdf("Running time", "seconds", seconds));
}

} // namespace orthosat
