/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <array>
#include <string>
#include <utility>

#include "orthosat/cnf.hpp"
#include "orthosat/graph.hpp"
#include "orthosat/sat.hpp"
#include "orthosat/shape.hpp"

namespace orthosat {

// Variables are numbered edge-major in label order L, R, D, U.
constexpr int label_variable(EdgeId e, Direction d) noexcept {
  return static_cast<int>(4 * idx(e) + idx(d) + 1);
}
std::pair<EdgeId, Direction> variable_label(int var);

// Positive literal that holds iff e, walked from `from`, points in d.
int traversal_literal(const Graph &g, EdgeId e, VertexId from, Direction d);

struct ClauseCounts {
  std::size_t edge = 0;
  std::size_t vertex = 0;
  std::size_t cycle = 0;

  std::size_t total() const noexcept { return edge + vertex + cycle; }
};

struct ShapeEncoding {
  CnfFormula cnf;
  std::size_t edge_count = 0;
  ClauseCounts counts;
};

// Exactly-one label per edge.
std::array<Clause, 7> edge_clauses(EdgeId e);
// One clause per label: some edge of c, walked along c, carries it.
std::array<Clause, 4> cycle_clauses(const Graph &g, const Cycle &c);

// Edge clauses, vertex clauses (pairwise exclusion at degree 2 and 3, all
// four directions present at degree 4 and above) and completeness clauses
// for every cycle of cs.
ShapeEncoding encode(const Graph &g, const CycleSet &cs);

Shape decode_model(const ShapeEncoding &f, const Model &m);

// Edge whose label literals occur most often in the cycle clauses of the
// refutation core. When the core holds no cycle clause the per-variable
// participation counts are summed per edge instead. Ties go to the smaller
// edge id.
EdgeId select_split_edge(const ShapeEncoding &f, const Refutation &r);

std::string to_dimacs(const ShapeEncoding &f);

} // namespace orthosat
