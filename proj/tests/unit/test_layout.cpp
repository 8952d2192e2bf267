/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include <gtest/gtest.h>

#include <random>
#include <set>

#include "convert.hpp"
#include "oracles.hpp"
#include "orthosat/error.hpp"
#include "orthosat/generators.hpp"
#include "orthosat/layout.hpp"

using namespace orthosat;
using namespace testing_support;

namespace {

const Direction L = Direction::L, R = Direction::R, D = Direction::D,
                U = Direction::U;

Point at(const Drawing &d, std::size_t v) { return d.points[v].at; }

// Every segment points along the label of its expanded edge, and every
// route runs from its edge's tail point to its head point.
void expect_faithful(const Graph &g, const Shape &s, const Drawing &d) {
  EXPECT_TRUE(drawing_violations(d).empty());
  ASSERT_EQ(d.routes.size(), g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto line = d.polyline(d.routes[e]);
    ASSERT_GE(line.size(), 2u);
    EXPECT_EQ(line.front(), at(d, idx(g.edge(eid(e)).tail)));
    EXPECT_EQ(line.back(), at(d, idx(g.edge(eid(e)).head)));
    if (g.max_degree() <= 4) {
      ASSERT_EQ(line.size(), 2u);
      const Direction lab = s.label(eid(e));
      const auto dx = line[1].x - line[0].x, dy = line[1].y - line[0].y;
      switch (lab) {
      case L: EXPECT_TRUE(dx < 0 && dy == 0); break;
      case R: EXPECT_TRUE(dx > 0 && dy == 0); break;
      case D: EXPECT_TRUE(dy < 0 && dx == 0); break;
      case U: EXPECT_TRUE(dy > 0 && dx == 0); break;
      }
    }
  }
}

} // namespace

TEST(Layout, UnitSquare) {
  const Graph g = cycle_graph(4);
  const Drawing d = draw(g, Shape({R, U, L, D}));
  ASSERT_EQ(d.points.size(), 4u);
  EXPECT_EQ(at(d, 0), (Point{0, 0}));
  EXPECT_EQ(at(d, 1), (Point{1, 0}));
  EXPECT_EQ(at(d, 2), (Point{1, 1}));
  EXPECT_EQ(at(d, 3), (Point{0, 1}));
  EXPECT_EQ(d.segments.size(), 4u);
  expect_faithful(g, Shape({R, U, L, D}), d);
}

TEST(Layout, SingleEdgeAndPath) {
  Graph k2(2);
  k2.add_edge(vid(0), vid(1));
  const Drawing a = draw(k2, Shape({L}));
  EXPECT_EQ(at(a, 0), (Point{1, 0}));
  EXPECT_EQ(at(a, 1), (Point{0, 0}));

  const Graph p = path_graph(3);
  const Drawing b = draw(p, Shape({R, U}));
  EXPECT_EQ(at(b, 0), (Point{0, 0}));
  EXPECT_EQ(at(b, 1), (Point{1, 0}));
  EXPECT_EQ(at(b, 2), (Point{1, 1}));
}

TEST(Layout, NonDrawableShapeIsRejected) {
  const ShapedGraph sg = aligned_conflict_example();
  EXPECT_THROW((void)draw(sg.graph, sg.shape), Error);
}

TEST(Layout, OverlapOnALineIsSeparated) {
  // Plain longest-path layers put vertices 1 and 4 both on (1, 0).
  Graph g(5);
  g.add_edge(vid(0), vid(1)); // R
  g.add_edge(vid(0), vid(2)); // U
  g.add_edge(vid(2), vid(3)); // R
  g.add_edge(vid(3), vid(4)); // D
  const Shape s({R, U, R, D});
  const Drawing d = draw(g, s);
  expect_faithful(g, s, d);
  EXPECT_NE(at(d, 1), at(d, 4));
}

TEST(Layout, CoordinatesRespectTheOrders) {
  std::mt19937_64 rng(12);
  int drawn = 0;
  for (int t = 0; t < 600; ++t) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const int m = n - 1 + static_cast<int>(rng() % n);
    const auto raw = random_connected(rng, n, m, 4);
    if (raw.n == 0)
      continue;
    const auto lab = random_valid_labels(rng, raw);
    if (lab.empty())
      continue;
    const Graph g = to_graph(raw);
    const Shape s = to_shape(lab);
    const auto r = test_drawable(g, s);
    if (!is_drawable(r))
      continue;
    ++drawn;
    const auto &o = std::get<TopologicalOrders>(r);
    const auto pts = assign_coordinates(g, s, o);
    ASSERT_EQ(pts.size(), g.vertex_count());
    for (const auto &arc : o.gx.arcs)
      for (auto u : o.gx.nodes[arc.from])
        for (auto v : o.gx.nodes[arc.to])
          EXPECT_LT(pts[idx(u)].x, pts[idx(v)].x);
    for (const auto &arc : o.gy.arcs)
      for (auto u : o.gy.nodes[arc.from])
        for (auto v : o.gy.nodes[arc.to])
          EXPECT_LT(pts[idx(u)].y, pts[idx(v)].y);
    for (const auto &node : o.gx.nodes)
      for (auto v : node)
        EXPECT_EQ(pts[idx(v)].x, pts[idx(node[0])].x);
    const Drawing d = draw(g, s);
    expect_faithful(g, s, d);
    // Every used column and row from 0 to the maximum.
    std::set<std::int64_t> xs, ys;
    for (const auto &p : d.points) {
      xs.insert(p.at.x);
      ys.insert(p.at.y);
    }
    EXPECT_EQ(*xs.begin(), 0);
    EXPECT_EQ(*ys.begin(), 0);
    EXPECT_EQ(static_cast<std::size_t>(*xs.rbegin()) + 1, xs.size());
    EXPECT_EQ(static_cast<std::size_t>(*ys.rbegin()) + 1, ys.size());
  }
  EXPECT_GT(drawn, 80);
}

TEST(Layout, ExpansionPlanForCrowdedStar) {
  const Graph g = star_graph(8);
  const Shape s({L, L, R, R, D, D, U, U});
  const ExpandedGraph x = expand_high_degree(g, s);
  ASSERT_EQ(x.plan.boxes.size(), 1u);
  const BoxPlan &box = x.plan.boxes[0];
  EXPECT_EQ(box.vertex, vid(0));
  EXPECT_EQ(box.sides[idx(L)], (std::vector<EdgeId>{eid(0), eid(1)}));
  EXPECT_EQ(box.sides[idx(U)], (std::vector<EdgeId>{eid(6), eid(7)}));
  EXPECT_EQ(box.vertical_ports.size(), 2u);
  EXPECT_EQ(box.horizontal_ports.size(), 2u);
  EXPECT_EQ(x.graph.vertex_count(), 9u + 4u);
  EXPECT_EQ(x.graph.edge_count(), 8u + 4u);
  EXPECT_LE(x.graph.max_degree(), 4u);
  EXPECT_FALSE(shape_violation(x.graph, x.shape).has_value());
  for (std::size_t e = 8; e < x.graph.edge_count(); ++e)
    EXPECT_EQ(x.graph.edge(eid(e)).origin, kNoEdge);
  for (auto p : box.vertical_ports)
    EXPECT_EQ(x.owner[idx(p)], vid(0));
  // The own U edge leaves from the top of the vertical chain.
  EXPECT_EQ(x.graph.edge(eid(6)).tail, box.vertical_ports.back());

  const Drawing d = draw(g, s);
  expect_faithful(g, s, d);
  for (auto p : box.vertical_ports)
    EXPECT_EQ(d.points[idx(p)].kind, PointKind::Port);
}

TEST(Layout, IdentityExpansionBelowDegreeFive) {
  const Graph g = cycle_graph(4);
  const Shape s({R, U, L, D});
  const ExpandedGraph x = expand_high_degree(g, s);
  EXPECT_TRUE(x.plan.empty());
  EXPECT_EQ(x.graph, g);
  EXPECT_EQ(x.shape, s);
  const Cycle c{{vid(0), vid(1), vid(2), vid(3)}};
  EXPECT_EQ(contract_cycle(x, c), c);
}

TEST(Layout, RandomHighDegreeShapesDrawCleanly) {
  std::mt19937_64 rng(31);
  int drawn = 0;
  for (int t = 0; t < 400; ++t) {
    // Mostly trees and unicyclic graphs, so that many samples are drawable.
    const int n = 4 + static_cast<int>(rng() % 6);
    const auto raw = random_connected(rng, n, n - 1 + static_cast<int>(rng() % 3), 7);
    if (raw.n == 0)
      continue;
    oracle::Labels lab(raw.edges.size());
    bool found = false;
    for (int tries = 0; tries < 2000 && !found; ++tries) {
      for (auto &d : lab)
        d = static_cast<int>(rng() % 4);
      found = oracle::valid_shape(raw, lab);
    }
    if (!found)
      continue;
    const Graph g = to_graph(raw);
    const Shape s = to_shape(lab);
    const ExpandedGraph x = expand_high_degree(g, s);
    EXPECT_LE(x.graph.max_degree(), 4u);
    const auto r = test_drawable(x.graph, x.shape);
    if (!is_drawable(r)) {
      const Cycle c = contract_cycle(
          x, extract_incomplete_cycle(x.graph, x.shape, std::get<WitnessCycle>(r)));
      EXPECT_TRUE(is_simple_cycle(g, c));
      continue;
    }
    ++drawn;
    const Drawing d = draw(x, std::get<TopologicalOrders>(r));
    expect_faithful(g, s, d);
  }
  EXPECT_GT(drawn, 10);
}

TEST(Layout, StraightenReportClassifiesDummies) {
  Graph g(2);
  g.add_edge(vid(0), vid(1));
  g.subdivide(eid(0));
  const Drawing bent = draw(g, Shape({R, U}));
  const auto a = straighten_report(bent);
  EXPECT_EQ(a.bends, (std::vector<VertexId>{vid(2)}));
  EXPECT_TRUE(a.straight.empty());
  EXPECT_DOUBLE_EQ(a.bend_ratio(), 1.0);
  EXPECT_TRUE(bent.points[2].bend);
  EXPECT_EQ(bent.points[2].kind, PointKind::Dummy);
  ASSERT_EQ(bent.routes.size(), 1u);
  EXPECT_EQ(bent.polyline(bent.routes[0]).size(), 3u);

  const Drawing flat = draw(g, Shape({R, R}));
  const auto b = straighten_report(flat);
  EXPECT_TRUE(b.bends.empty());
  EXPECT_EQ(b.straight, (std::vector<VertexId>{vid(2)}));
  EXPECT_DOUBLE_EQ(b.bend_ratio(), 0.0);
}

TEST(Layout, ViolationsAreReported) {
  Drawing d;
  d.points = {DrawnPoint{{0, 0}}, DrawnPoint{{2, 0}}, DrawnPoint{{1, 0}},
              DrawnPoint{{2, 0}}};
  d.segments = {DrawnSegment{0, 1, R}, DrawnSegment{0, 2, L}};
  const auto v = drawing_violations(d);
  // Coinciding points, a wrong direction and a point inside a segment.
  EXPECT_GE(v.size(), 3u);
}
