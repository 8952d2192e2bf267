/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "orthosat/generators.hpp"

#include <cmath>
#include <string>

#include "orthosat/error.hpp"
#include "orthosat/random.hpp"

namespace orthosat {

std::size_t target_edge_count(std::size_t n, double density) {
  return static_cast<std::size_t>(
      std::floor(static_cast<double>(n) * density + 1e-9));
}

Graph generate_random_deg4_edges(std::size_t n, std::size_t m,
                                 std::uint64_t seed, GeneratorBudget budget) {
  if (n < 2)
    fail(ErrorCode::InvalidArgument, "need at least 2 vertices");
  if (m > 2 * n)
    fail(ErrorCode::Infeasible, "a max-degree-4 graph on " +
                                    std::to_string(n) + " vertices has at most " +
                                    std::to_string(2 * n) + " edges");
  if (m + 1 < n)
    fail(ErrorCode::Infeasible, std::to_string(m) +
                                    " edges cannot connect " +
                                    std::to_string(n) + " vertices");

  Rng rng(seed);
  const std::size_t draws = budget.draws_per_edge * m;
  for (std::size_t attempt = 0; attempt < budget.attempts; ++attempt) {
    Graph g(n);
    for (std::size_t d = 0; d < draws && g.edge_count() < m; ++d) {
      const VertexId u = vid(rng.below(n));
      const VertexId v = vid(rng.below(n));
      if (u == v || g.degree(u) >= 4 || g.degree(v) >= 4 || g.find_edge(u, v))
        continue;
      g.add_edge(u, v);
    }
    if (g.edge_count() == m && g.is_connected())
      return g;
  }
  fail(ErrorCode::Infeasible,
       "no connected graph with n=" + std::to_string(n) +
           " m=" + std::to_string(m) + " found within " +
           std::to_string(budget.attempts) + " attempts of " +
           std::to_string(draws) + " pair draws");
}

Graph generate_random_deg4(std::size_t n, double density, std::uint64_t seed,
                           GeneratorBudget budget) {
  if (!(density > 0.0) || density > 2.0)
    fail(ErrorCode::InvalidArgument, "density must lie in (0, 2]");
  return generate_random_deg4_edges(n, target_edge_count(n, density), seed,
                                    budget);
}

namespace {

using enum Direction;

struct ShapedBuilder {
  ShapedGraph sg;

  VertexId vertex() { return sg.graph.add_vertex(); }
  void edge(VertexId a, VertexId b, Direction d) {
    sg.graph.add_edge(a, b);
    sg.shape.push_back(d);
  }
  void path(VertexId from, VertexId to, std::initializer_list<Direction> ds) {
    VertexId prev = from;
    std::size_t k = 0;
    for (Direction d : ds) {
      const VertexId next = (++k == ds.size()) ? to : vertex();
      edge(prev, next, d);
      prev = next;
    }
  }
};

} // namespace

ShapedGraph adversarial_family(std::size_t i) {
  if (i < 1)
    fail(ErrorCode::InvalidArgument, "family index must be at least 1");
  ShapedBuilder b;
  std::vector<VertexId> v(5), u(5), x(i), y(i);
  // Outer cycle order: v1..v5, y1..yi, u5..u1, xi..x1.
  for (auto &a : v)
    a = b.vertex();
  for (auto &a : y)
    a = b.vertex();
  for (std::size_t k = 5; k-- > 0;)
    u[k] = b.vertex();
  for (std::size_t k = i; k-- > 0;)
    x[k] = b.vertex();

  b.edge(v[0], v[1], D);
  b.edge(v[1], v[2], L);
  b.edge(v[2], v[3], L);
  b.edge(v[3], v[4], D);
  b.edge(v[4], y[0], R);
  for (std::size_t k = 0; k + 1 < i; ++k)
    b.edge(y[k], y[k + 1], R);
  b.edge(y[i - 1], u[4], R);
  b.edge(u[4], u[3], D);
  b.edge(u[3], u[2], L);
  b.edge(u[2], u[1], L);
  b.edge(u[1], u[0], D);
  b.edge(u[0], x[i - 1], R);
  for (std::size_t k = i - 1; k > 0; --k)
    b.edge(x[k], x[k - 1], R);
  b.edge(x[0], v[0], R);

  b.path(v[0], v[4], {R, U, L, D, R});
  b.path(u[0], u[4], {D, R, U, L, D});
  b.path(v[1], u[1], {D, R, U, L, D});
  b.path(v[2], u[2], {U, R, D, L, U});
  b.path(v[3], u[3], {U, R, D, L, U});
  for (std::size_t k = 0; k < i; ++k)
    b.path(x[k], y[k], {U, R, D, L, U});
  return std::move(b.sg);
}

ShapedGraph aligned_conflict_example() {
  ShapedBuilder b;
  for (int k = 0; k < 12; ++k)
    b.vertex();
  const auto e = [&](unsigned a, unsigned c, Direction d) {
    b.edge(vid(a), vid(c), d);
  };
  e(9, 7, D);
  e(7, 8, D);
  e(8, 11, D);
  e(11, 4, D);
  e(4, 10, R);
  e(10, 5, U);
  e(5, 1, U);
  e(1, 0, U);
  e(0, 6, U);
  e(6, 9, R);
  e(5, 2, L);
  e(2, 3, U);
  e(3, 1, R);
  return std::move(b.sg);
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t k = 0; k + 1 < n; ++k)
    g.add_edge(vid(k), vid(k + 1));
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3)
    fail(ErrorCode::InvalidArgument, "a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(vid(n - 1), vid(0));
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c)
      g.add_edge(vid(a), vid(c));
  return g;
}

Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (std::size_t k = 1; k <= leaves; ++k)
    g.add_edge(vid(0), vid(k));
  return g;
}

} // namespace orthosat
