/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "orthosat/encode.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "orthosat/error.hpp"

namespace orthosat {

std::pair<EdgeId, Direction> variable_label(int var) {
  if (var < 1)
    fail(ErrorCode::InvalidArgument, "variable ids start at 1");
  const auto k = static_cast<std::uint32_t>(var - 1);
  return {eid(k / 4), static_cast<Direction>(k % 4)};
}

int traversal_literal(const Graph &g, EdgeId e, VertexId from, Direction d) {
  const Edge &ed = g.edge(e);
  if (ed.tail == from)
    return label_variable(e, d);
  if (ed.head == from)
    return label_variable(e, opposite(d));
  fail(ErrorCode::InvalidArgument, "vertex " + std::to_string(idx(from)) +
                                       " is not an endpoint of edge " +
                                       std::to_string(idx(e)));
}

std::array<Clause, 7> edge_clauses(EdgeId e) {
  using enum Direction;
  const int l = label_variable(e, L), r = label_variable(e, R);
  const int d = label_variable(e, D), u = label_variable(e, U);
  return {Clause{l, r, d, u}, Clause{-l, -r}, Clause{-d, -l}, Clause{-d, -r},
          Clause{-u, -l},     Clause{-u, -r}, Clause{-u, -d}};
}

std::array<Clause, 4> cycle_clauses(const Graph &g, const Cycle &c) {
  const auto edges = cycle_edges(g, c);
  std::array<Clause, 4> out;
  for (Direction d : kDirections) {
    Clause &cl = out[idx(d)];
    cl.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
      cl.push_back(traversal_literal(g, edges[i], c.vertices[i], d));
  }
  return out;
}

ShapeEncoding encode(const Graph &g, const CycleSet &cs) {
  ShapeEncoding f;
  f.edge_count = g.edge_count();
  f.cnf.num_vars = static_cast<int>(4 * g.edge_count());

  for (std::size_t i = 0; i < g.edge_count(); ++i)
    for (auto &c : edge_clauses(eid(i))) {
      f.cnf.add(std::move(c));
      ++f.counts.edge;
    }

  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const VertexId v = vid(i);
    const auto adj = g.incident(v);
    if (adj.size() >= 4) {
      for (Direction d : kDirections) {
        Clause cl;
        for (const auto &inc : adj)
          cl.push_back(traversal_literal(g, inc.edge, v, d));
        f.cnf.add(std::move(cl));
        ++f.counts.vertex;
      }
    } else if (adj.size() >= 2) {
      for (std::size_t a = 0; a < adj.size(); ++a)
        for (std::size_t b = a + 1; b < adj.size(); ++b)
          for (Direction d : kDirections) {
            f.cnf.add({-traversal_literal(g, adj[a].edge, v, d),
                       -traversal_literal(g, adj[b].edge, v, d)});
            ++f.counts.vertex;
          }
    }
  }

  for (const Cycle &c : cs)
    for (auto &cl : cycle_clauses(g, c)) {
      f.cnf.add(std::move(cl));
      ++f.counts.cycle;
    }
  return f;
}

Shape decode_model(const ShapeEncoding &f, const Model &m) {
  Shape s;
  for (std::size_t i = 0; i < f.edge_count; ++i) {
    int chosen = -1;
    for (Direction d : kDirections) {
      if (!m.value(label_variable(eid(i), d)))
        continue;
      if (chosen >= 0)
        fail(ErrorCode::Internal,
             "model gives edge " + std::to_string(i) + " two labels");
      chosen = idx(d);
    }
    if (chosen < 0)
      fail(ErrorCode::Internal,
           "model gives edge " + std::to_string(i) + " no label");
    s.push_back(static_cast<Direction>(chosen));
  }
  return s;
}

EdgeId select_split_edge(const ShapeEncoding &f, const Refutation &r) {
  std::vector<std::uint64_t> score(f.edge_count, 0);
  const std::size_t first_cycle = f.counts.edge + f.counts.vertex;
  for (auto k : r.core) {
    if (k < first_cycle || k >= f.cnf.clauses.size())
      continue;
    for (int lit : f.cnf.clauses[k])
      score[static_cast<std::size_t>(std::abs(lit) - 1) / 4] += 1;
  }
  if (std::all_of(score.begin(), score.end(), [](auto v) { return v == 0; }))
    for (std::size_t v = 1; v < r.participation.size(); ++v)
      score[(v - 1) / 4] += r.participation[v];
  std::uint64_t best = 0;
  std::size_t best_edge = 0;
  for (std::size_t i = 0; i < f.edge_count; ++i) {
    if (score[i] > best) {
      best = score[i];
      best_edge = i;
    }
  }
  if (best == 0)
    fail(ErrorCode::Internal, "refutation mentions no edge variable");
  return eid(best_edge);
}

std::string to_dimacs(const ShapeEncoding &f) {
  std::vector<std::string> comments;
  comments.reserve(f.edge_count * 4);
  for (std::size_t i = 0; i < f.edge_count; ++i)
    for (Direction d : kDirections)
      comments.push_back("var " + std::to_string(label_variable(eid(i), d)) +
                         " edge " + std::to_string(i) + " label " +
                         std::string(1, to_char(d)));
  return to_dimacs(f.cnf, comments);
}

} // namespace orthosat
