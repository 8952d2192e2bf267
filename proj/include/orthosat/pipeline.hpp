/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orthosat/drawability.hpp"
#include "orthosat/graph.hpp"
#include "orthosat/layout.hpp"
#include "orthosat/sat.hpp"
#include "orthosat/shape.hpp"

namespace orthosat {

struct PipelineConfig {
  SolverConfig solver;
  // 0 selects the defaults: 10 |E| subdivisions, 50 |E| added cycles.
  std::size_t max_subdivisions = 0;
  std::size_t max_cycle_additions = 0;
};

struct PipelineCounters {
  std::size_t cycles_added = 0;
  std::size_t dummies_added = 0;
  std::size_t sat_invocations = 0;
};

struct FormulaSize {
  std::size_t variables = 0;
  std::size_t clauses = 0;
};

struct RunReport {
  Graph graph; // final subdivision of the input
  Shape shape;
  CycleSet cycles;
  SubdivisionRecord subdivisions;
  PipelineCounters counters;
  std::vector<Cycle> added_cycles; // as extracted, in the graph of that time
  std::vector<FormulaSize> formula_sizes; // one per SAT invocation
  std::vector<std::string> log;
  ExpandedGraph expanded;
  TopologicalOrders orders;
  double shape_seconds = 0.0;   // encoding and solving
  double drawing_seconds = 0.0; // drawability tests and cycle extraction
  SolverStats solver_stats;     // summed over every solver instance
};

// Alternates SAT-based shape construction and the drawability test until
// the shape of the current subdivision is drawable. An UNSAT answer splits
// one edge chosen from the refutation; a non-drawable shape adds one
// incomplete cycle to the constraint set. Throws IterationCap when a cap is
// exceeded, with the counters in the message.
RunReport run_sm(const Graph &g, const PipelineConfig &cfg = {});

} // namespace orthosat
