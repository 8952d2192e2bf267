/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace orthosat {

enum class VertexId : std::uint32_t {};
enum class EdgeId : std::uint32_t {};

constexpr std::uint32_t idx(VertexId v) noexcept {
  return static_cast<std::uint32_t>(v);
}
constexpr std::uint32_t idx(EdgeId e) noexcept {
  return static_cast<std::uint32_t>(e);
}
constexpr VertexId vid(std::size_t i) noexcept {
  return static_cast<VertexId>(static_cast<std::uint32_t>(i));
}
constexpr EdgeId eid(std::size_t i) noexcept {
  return static_cast<EdgeId>(static_cast<std::uint32_t>(i));
}

// Placeholder origin for edges that belong to no input edge.
inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(UINT32_MAX);

enum class VertexKind : std::uint8_t { Real, Dummy };

struct VertexInfo {
  VertexKind kind = VertexKind::Real;
  // For dummies: the edge of the input graph whose subdivision created it.
  EdgeId parent{};

  bool operator==(const VertexInfo &) const = default;
};

struct Edge {
  VertexId tail;
  VertexId head;
  // Edge of the input graph this edge is a piece of (itself if never split).
  EdgeId origin;

  bool operator==(const Edge &) const = default;
};

struct Incidence {
  EdgeId edge;
  VertexId neighbor;
};

// Undirected simple graph. Each edge keeps the (tail, head) pair it was
// created with; that pair is the reference orientation used by shapes.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  VertexId add_vertex(VertexInfo info = {});
  EdgeId add_edge(VertexId tail, VertexId head);
  EdgeId add_edge(VertexId tail, VertexId head, EdgeId origin);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Edge &edge(EdgeId e) const;
  const VertexInfo &info(VertexId v) const;
  std::span<const Incidence> incident(VertexId v) const;
  std::size_t degree(VertexId v) const { return incident(v).size(); }
  std::size_t max_degree() const noexcept;

  bool has_vertex(VertexId v) const noexcept {
    return idx(v) < vertices_.size();
  }
  bool has_edge(EdgeId e) const noexcept { return idx(e) < edges_.size(); }
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  VertexId other_end(EdgeId e, VertexId from) const;

  bool is_connected() const;
  std::size_t real_vertex_count() const noexcept;

  // Splits e = (u, v) into (u, w) and (w, v). The first piece keeps the id
  // of e; the second gets the next free id. Returns the new dummy w.
  VertexId subdivide(EdgeId e);

  bool operator==(const Graph &other) const {
    return edges_ == other.edges_ && vertices_ == other.vertices_;
  }

private:
  std::vector<VertexInfo> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

// Cyclic vertex sequence; consecutive vertices (and last, first) are joined
// by edges of the graph.
struct Cycle {
  std::vector<VertexId> vertices;

  std::size_t size() const noexcept { return vertices.size(); }
  auto operator<=>(const Cycle &) const = default;
};

using CycleSet = std::vector<Cycle>;

// Rotates and reflects so that the smallest vertex comes first, followed by
// its smaller neighbour on the cycle.
Cycle canonical(Cycle c);

// Edges of c in traversal order: edge i joins vertices[i] and vertices[i+1].
// Throws InvalidArgument if c is not a simple cycle of g.
std::vector<EdgeId> cycle_edges(const Graph &g, const Cycle &c);
bool is_simple_cycle(const Graph &g, const Cycle &c);

struct BiconnectedComponent {
  std::vector<EdgeId> edges;
  bool trivial = false;
};

std::vector<BiconnectedComponent> biconnected_components(const Graph &g);

// Fundamental cycles of a BFS tree rooted at the lowest vertex id.
CycleSet cycle_basis(const Graph &g);

struct SubdivisionStep {
  EdgeId split;
  VertexId dummy;
  EdgeId first;  // (tail, dummy); same id as split
  EdgeId second; // (dummy, head)
  VertexId tail;
  VertexId head;
};

// Per input edge, the ordered chain of replacement edges and dummies running
// from the input edge's tail to its head.
class SubdivisionRecord {
public:
  SubdivisionRecord() = default;
  explicit SubdivisionRecord(const Graph &input);

  void apply(const SubdivisionStep &step);

  std::size_t original_edge_count() const noexcept { return edges_.size(); }
  std::span<const EdgeId> edges_of(EdgeId original) const;
  std::span<const VertexId> dummies_of(EdgeId original) const;
  std::size_t dummy_count() const noexcept { return dummies_total_; }
  EdgeId original_of(EdgeId e) const;
  const std::vector<SubdivisionStep> &steps() const noexcept { return steps_; }

private:
  std::vector<std::vector<EdgeId>> edges_;
  std::vector<std::vector<VertexId>> dummies_;
  std::vector<EdgeId> owner_;
  std::vector<SubdivisionStep> steps_;
  std::size_t dummies_total_ = 0;
};

// Returns the subdivided copy of g and the step describing the split.
std::pair<Graph, SubdivisionStep> subdivide_edge(const Graph &g, EdgeId e);

// Inserts the dummy of step into every cycle that used the split edge.
CycleSet rewrite_cycles(const CycleSet &cs, const SubdivisionStep &step);

} // namespace orthosat
