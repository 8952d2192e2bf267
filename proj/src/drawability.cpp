/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "orthosat/drawability.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

#include "orthosat/error.hpp"

namespace orthosat {

namespace {

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<std::uint32_t> parent_;
};

DisjointSets aligned_classes(const Graph &g, const Shape &s, Axis axis) {
  DisjointSets ds(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge &e = g.edge(eid(i));
    if (aligns(axis, s.label(eid(i))))
      ds.unite(idx(e.tail), idx(e.head));
  }
  return ds;
}

} // namespace

CompletenessReport is_cycle_complete(const Graph &g, const Shape &s,
                                     const Cycle &c) {
  const auto edges = cycle_edges(g, c);
  CompletenessReport r;
  for (std::size_t i = 0; i < edges.size(); ++i)
    r.mask |= bit(s.from(g, edges[i], c.vertices[i]));
  return r;
}

AuxiliaryGraph build_auxiliary(const Graph &g, const Shape &s, Axis axis) {
  validate_shape(g, s);
  AuxiliaryGraph a;
  a.axis = axis;
  DisjointSets ds = aligned_classes(g, s, axis);

  // Representatives are the smallest members, so numbering nodes in order
  // of first appearance sorts them by smallest member.
  std::vector<std::uint32_t> node_of_root(g.vertex_count(), UINT32_MAX);
  a.node_of.resize(g.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    const auto root = ds.find(v);
    if (node_of_root[root] == UINT32_MAX) {
      node_of_root[root] = static_cast<std::uint32_t>(a.nodes.size());
      a.nodes.emplace_back();
    }
    a.node_of[v] = node_of_root[root];
    a.nodes[a.node_of[v]].push_back(vid(v));
  }

  a.out.resize(a.nodes.size());
  const Direction fwd = forward_label(axis);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge &e = g.edge(eid(i));
    const Direction d = s.label(eid(i));
    if (aligns(axis, d))
      continue;
    const VertexId from = d == fwd ? e.tail : e.head;
    const VertexId to = d == fwd ? e.head : e.tail;
    a.out[a.node_of[idx(from)]].push_back(
        static_cast<std::uint32_t>(a.arcs.size()));
    a.arcs.push_back({a.node_of[idx(from)], a.node_of[idx(to)], eid(i)});
  }
  return a;
}

std::vector<std::uint32_t> topological_order(const AuxiliaryGraph &a) {
  std::vector<std::uint32_t> indeg(a.nodes.size(), 0);
  for (const auto &arc : a.arcs)
    ++indeg[arc.to];
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>,
                      std::greater<>>
      ready;
  for (std::uint32_t n = 0; n < a.nodes.size(); ++n)
    if (indeg[n] == 0)
      ready.push(n);
  std::vector<std::uint32_t> order;
  order.reserve(a.nodes.size());
  while (!ready.empty()) {
    const auto n = ready.top();
    ready.pop();
    order.push_back(n);
    for (auto ai : a.out[n])
      if (--indeg[a.arcs[ai].to] == 0)
        ready.push(a.arcs[ai].to);
  }
  return order;
}

namespace {

WitnessCycle find_cycle(const Graph &g, const Shape &s,
                        const AuxiliaryGraph &a) {
  enum : std::uint8_t { White, Grey, Black };
  std::vector<std::uint8_t> color(a.nodes.size(), White);
  std::vector<std::uint32_t> via(a.nodes.size(), UINT32_MAX);
  struct Frame {
    std::uint32_t node;
    std::size_t next;
  };
  for (std::uint32_t root = 0; root < a.nodes.size(); ++root) {
    if (color[root] != White)
      continue;
    std::vector<Frame> stack{{root, 0}};
    color[root] = Grey;
    while (!stack.empty()) {
      Frame &f = stack.back();
      if (f.next == a.out[f.node].size()) {
        color[f.node] = Black;
        stack.pop_back();
        continue;
      }
      const auto ai = a.out[f.node][f.next++];
      const auto to = a.arcs[ai].to;
      if (color[to] == White) {
        color[to] = Grey;
        via[to] = ai;
        stack.push_back({to, 0});
        continue;
      }
      if (color[to] != Grey)
        continue;
      // Back arc closes a cycle through the grey nodes on the stack.
      std::vector<std::uint32_t> arcs{ai};
      for (auto n = f.node; n != to; n = a.arcs[via[n]].from)
        arcs.push_back(via[n]);
      std::reverse(arcs.begin(), arcs.end());
      WitnessCycle w;
      w.axis = a.axis;
      const Direction fwd = forward_label(a.axis);
      for (auto k : arcs) {
        const EdgeId e = a.arcs[k].witness;
        const Edge &ed = g.edge(e);
        const bool along = s.label(e) == fwd;
        w.arcs.push_back({e, along ? ed.tail : ed.head,
                          along ? ed.head : ed.tail});
      }
      return w;
    }
  }
  fail(ErrorCode::Internal, "auxiliary graph has no cycle");
}

} // namespace

DrawabilityResult test_drawable(const Graph &g, const Shape &s) {
  TopologicalOrders t;
  t.gx = build_auxiliary(g, s, Axis::X);
  t.x = topological_order(t.gx);
  if (t.x.size() != t.gx.nodes.size())
    return find_cycle(g, s, t.gx);
  t.gy = build_auxiliary(g, s, Axis::Y);
  t.y = topological_order(t.gy);
  if (t.y.size() != t.gy.nodes.size())
    return find_cycle(g, s, t.gy);
  return t;
}

Cycle extract_incomplete_cycle(const Graph &g, const Shape &s,
                               const WitnessCycle &w) {
  validate_shape(g, s);
  if (w.arcs.empty())
    fail(ErrorCode::InvalidArgument, "empty witness");
  DisjointSets ds = aligned_classes(g, s, w.axis);
  const Direction fwd = forward_label(w.axis);
  const std::size_t p = w.arcs.size();
  for (std::size_t i = 0; i < p; ++i) {
    const WitnessArc &arc = w.arcs[i];
    const WitnessArc &next = w.arcs[(i + 1) % p];
    if (!g.has_edge(arc.edge) || !g.has_vertex(arc.from) ||
        !g.has_vertex(arc.to) || g.other_end(arc.edge, arc.from) != arc.to ||
        s.from(g, arc.edge, arc.from) != fwd ||
        ds.find(idx(arc.to)) != ds.find(idx(next.from)))
      fail(ErrorCode::InvalidArgument, "stale witness");
  }

  // Shortest aligned path from a to b (both in the same class).
  std::vector<std::uint32_t> prev(g.vertex_count(), UINT32_MAX);
  const auto aligned_path = [&](VertexId a, VertexId b) {
    std::vector<std::uint32_t> visited{idx(a)};
    std::deque<std::uint32_t> queue{idx(a)};
    prev[idx(a)] = idx(a);
    while (!queue.empty() && prev[idx(b)] == UINT32_MAX) {
      const auto v = queue.front();
      queue.pop_front();
      for (const auto &inc : g.incident(vid(v))) {
        const auto u = idx(inc.neighbor);
        if (prev[u] != UINT32_MAX || !aligns(w.axis, s.label(inc.edge)))
          continue;
        prev[u] = v;
        visited.push_back(u);
        queue.push_back(u);
      }
    }
    std::vector<VertexId> path;
    for (auto v = idx(b); v != idx(a); v = prev[v])
      path.push_back(vid(v));
    path.push_back(a);
    std::reverse(path.begin(), path.end());
    for (auto v : visited)
      prev[v] = UINT32_MAX;
    return path;
  };

  Cycle c;
  for (std::size_t i = 0; i < p; ++i) {
    const VertexId entry = w.arcs[(i + p - 1) % p].to;
    const VertexId exit = w.arcs[i].from;
    const auto path = aligned_path(entry, exit);
    c.vertices.insert(c.vertices.end(), path.begin(), path.end());
  }
  if (!is_simple_cycle(g, c))
    fail(ErrorCode::Internal, "witness does not yield a simple cycle");
  // Rotate only: reflecting would walk the witness edges backwards.
  std::rotate(c.vertices.begin(),
              std::min_element(c.vertices.begin(), c.vertices.end()),
              c.vertices.end());
  return c;
}

std::string to_dot(const AuxiliaryGraph &a) {
  std::ostringstream out;
  out << "digraph G" << (a.axis == Axis::X ? 'x' : 'y') << " {\n";
  for (std::size_t n = 0; n < a.nodes.size(); ++n) {
    out << "  n" << n << " [label=\"{";
    for (std::size_t k = 0; k < a.nodes[n].size(); ++k)
      out << (k ? "," : "") << idx(a.nodes[n][k]);
    out << "}\"];\n";
  }
  for (const auto &arc : a.arcs)
    out << "  n" << arc.from << " -> n" << arc.to << " [label=\"e"
        << idx(arc.witness) << "\"];\n";
  out << "}\n";
  return out.str();
}

} // namespace orthosat
