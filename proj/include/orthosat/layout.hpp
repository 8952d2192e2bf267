/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "orthosat/drawability.hpp"
#include "orthosat/graph.hpp"
#include "orthosat/shape.hpp"

namespace orthosat {

// How the edges around one vertex of degree above four are attached to its
// box. Each side lists the vertex's edges leaving in that direction, sorted
// by edge id; the first one stays on the vertex. The other R and L edges
// leave from a chain of ports stacked above the vertex (R first), and the
// vertex's own U edge moves to the top of that chain. The other U and D
// edges leave from a chain of ports to the right (U first), and the own R
// edge moves to its end.
struct BoxPlan {
  VertexId vertex{};
  std::array<std::vector<EdgeId>, 4> sides; // indexed by Direction
  std::vector<VertexId> vertical_ports;     // bottom to top
  std::vector<VertexId> horizontal_ports;   // left to right
};

struct ExpansionPlan {
  std::vector<BoxPlan> boxes;

  bool empty() const noexcept { return boxes.empty(); }
};

// Graph with every box replaced by its port chains. Vertices keep their ids
// and ports come after them; edge i mirrors edge i of the source graph and
// the chain edges come last (origin kNoEdge).
struct ExpandedGraph {
  Graph graph;
  Shape shape;
  ExpansionPlan plan;
  std::size_t source_vertices = 0;
  std::size_t source_edges = 0;
  std::vector<VertexId> owner; // expanded vertex -> source vertex
  // Per source edge: expanded vertices walked from its tail to its head,
  // chain ports included.
  std::vector<std::vector<VertexId>> routes;
};

// Identity (no ports) when every vertex has degree at most four.
ExpandedGraph expand_high_degree(const Graph &g, const Shape &s);

// Maps a cycle of the expanded graph back to a simple cycle of the source
// graph. Ports collapse onto their box vertex; if that repeats a vertex the
// first simple piece of the closed walk is returned.
Cycle contract_cycle(const ExpandedGraph &x, const Cycle &c);

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  auto operator<=>(const Point &) const = default;
};

enum class PointKind : std::uint8_t { Vertex, Dummy, Port };

struct DrawnPoint {
  Point at;
  PointKind kind = PointKind::Vertex;
  VertexId vertex{}; // source vertex; a port reports its box vertex
  bool bend = false; // dummies only: the two segments turn
};

// One edge of the drawn (expanded) graph, from its tail point to its head.
struct DrawnSegment {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  Direction label = Direction::R;
};

// Polyline of one input edge through the drawn points it visits.
struct EdgeRoute {
  EdgeId edge{};
  std::vector<std::uint32_t> points;
};

struct Drawing {
  std::vector<DrawnPoint> points; // index = expanded vertex id
  std::vector<DrawnSegment> segments;
  std::vector<EdgeRoute> routes;

  std::vector<Point> polyline(const EdgeRoute &r) const;
};

// Coordinates from longest-path layers of both auxiliary graphs. Two classes
// that land on the same line while overlapping along it get an extra arc,
// oriented by the initial topological order, and the layers are recomputed
// until no such pair remains. Requires a shape valid at degree four and
// acyclic orders for this graph and shape.
std::vector<Point> assign_coordinates(const Graph &g, const Shape &s,
                                      const TopologicalOrders &orders);

// Full layout: expansion, drawability test, coordinates and routes. Throws
// InvalidArgument when the (expanded) shape is not drawable.
Drawing draw(const Graph &g, const Shape &s);
Drawing draw(const ExpandedGraph &x, const TopologicalOrders &orders);

// Empty when the drawing meets every grid-drawing rule: distinct points,
// non-degenerate axis-parallel segments pointing along their labels, no
// point inside a segment, every row and column from 0 to the maximum used.
std::vector<std::string> drawing_violations(const Drawing &d);

struct StraightenReport {
  std::vector<VertexId> bends;
  std::vector<VertexId> straight;

  double bend_ratio() const noexcept;
};

StraightenReport straighten_report(const Drawing &d);

} // namespace orthosat
