/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "orthosat/graph.hpp"
#include "orthosat/shape.hpp"

namespace orthosat {

enum class Axis : std::uint8_t { X, Y };

// Label that moves strictly forward along an axis: R for X, U for Y.
constexpr Direction forward_label(Axis a) noexcept {
  return a == Axis::X ? Direction::R : Direction::U;
}
// Labels that keep a vertex aligned with its neighbour on an axis.
constexpr bool aligns(Axis a, Direction d) noexcept {
  return a == Axis::X ? !is_horizontal(d) : is_horizontal(d);
}

struct CompletenessReport {
  std::uint8_t mask = 0; // bit(d) set when some edge is walked in direction d

  bool has(Direction d) const noexcept { return (mask & bit(d)) != 0; }
  bool complete() const noexcept { return mask == 0xF; }
};

CompletenessReport is_cycle_complete(const Graph &g, const Shape &s,
                                     const Cycle &c);

struct AuxArc {
  std::uint32_t from;
  std::uint32_t to;
  EdgeId witness;
};

// Nodes are the maximal classes of vertices joined by aligned edges (D/U
// for X, L/R for Y). An arc from a to b means every vertex of a lies
// strictly before every vertex of b along the axis.
struct AuxiliaryGraph {
  Axis axis = Axis::X;
  std::vector<std::vector<VertexId>> nodes; // ordered by smallest member
  std::vector<std::uint32_t> node_of;       // vertex -> node
  std::vector<AuxArc> arcs;                 // in edge id order
  std::vector<std::vector<std::uint32_t>> out; // node -> arc indices
};

AuxiliaryGraph build_auxiliary(const Graph &g, const Shape &s, Axis axis);

// Kahn order taking the smallest ready node first; empty optional-like
// result (size < node count) when the graph has a cycle.
std::vector<std::uint32_t> topological_order(const AuxiliaryGraph &a);

struct TopologicalOrders {
  AuxiliaryGraph gx, gy;
  std::vector<std::uint32_t> x, y; // node sequences
};

struct WitnessArc {
  EdgeId edge;
  VertexId from; // endpoint in the arc's source class
  VertexId to;   // endpoint in the arc's target class
};

// Directed cycle of an auxiliary graph, as its sequence of arcs.
struct WitnessCycle {
  Axis axis = Axis::X;
  std::vector<WitnessArc> arcs;
};

using DrawabilityResult = std::variant<TopologicalOrders, WitnessCycle>;

// Drawable iff both auxiliary graphs are acyclic. The X axis is checked
// first; the first back arc found by a depth-first search gives the witness.
DrawabilityResult test_drawable(const Graph &g, const Shape &s);

inline bool is_drawable(const DrawabilityResult &r) {
  return std::holds_alternative<TopologicalOrders>(r);
}

// Joins the witness arcs with paths inside each aligned class. The result
// is a simple cycle of g that never walks an edge backwards along the axis,
// so it lacks L (X witness) or D (Y witness).
Cycle extract_incomplete_cycle(const Graph &g, const Shape &s,
                               const WitnessCycle &w);

std::string to_dot(const AuxiliaryGraph &a);

} // namespace orthosat
