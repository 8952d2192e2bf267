/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "orthosat/metrics.hpp"
#include "orthosat/pipeline.hpp"

namespace orthosat {

// Density of grid index i: 1.25 + i / 200, so i = 0..100 spans 1.25..1.75.
double grid_density(std::size_t i);
// floor(n (250 + i) / 200), computed in integers.
std::size_t grid_edge_count(std::size_t n, std::size_t i);

// splitmix64 of the base seed mixed with (n, i, repetition).
std::uint64_t instance_seed(std::uint64_t base, std::size_t n, std::size_t i,
                            std::size_t repetition);

struct BenchConfig {
  std::vector<std::size_t> ns;         // vertex counts
  std::vector<std::size_t> grid;       // density indices, see grid_density
  std::size_t repetitions = 1;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool record_time = true; // false writes 0 for every time column
  PipelineConfig pipeline;
};

struct BenchRow {
  std::string instance; // n<n>_i<i>_r<rep>
  std::size_t n = 0, i = 0, repetition = 0;
  std::size_t edges = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  std::size_t violations = 0; // drawing rule violations, expected 0
  MetricsReport metrics;
  PipelineCounters counters;
  std::size_t dummies_as_bends = 0;
  std::size_t dummies_straight = 0;
  double mean_variables = 0.0; // over the SAT invocations of the run
  double mean_clauses = 0.0;
  std::size_t invocations = 0;
  double seconds = 0.0;
};

// Generates and runs one instance: pipeline, layout, metrics, checks.
BenchRow run_instance(std::size_t n, std::size_t i, std::size_t repetition,
                      const BenchConfig &cfg);

// All instances of the grid in (n, i, repetition) order. With jobs > 1 the
// instances run on worker threads; `on_row` still sees them in order.
std::vector<BenchRow>
run_bench(const BenchConfig &cfg,
          const std::function<void(const BenchRow &)> &on_row = {});

std::string internals_csv(const std::vector<BenchRow> &rows);
std::string formula_csv(const std::vector<BenchRow> &rows);
std::string bench_metrics_csv(const std::vector<BenchRow> &rows);

// Writes metrics.csv, internals.csv, formula.csv and the CDF plots of the
// four internals quantities into dir, which must exist.
void write_bench_outputs(const std::vector<BenchRow> &rows,
                         const std::string &dir);

} // namespace orthosat
