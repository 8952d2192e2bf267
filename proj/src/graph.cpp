/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "orthosat/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "orthosat/error.hpp"

namespace orthosat {

Graph::Graph(std::size_t vertex_count)
    : vertices_(vertex_count), adjacency_(vertex_count) {}

VertexId Graph::add_vertex(VertexInfo info) {
  vertices_.push_back(info);
  adjacency_.emplace_back();
  return vid(vertices_.size() - 1);
}

EdgeId Graph::add_edge(VertexId tail, VertexId head) {
  return add_edge(tail, head, eid(edges_.size()));
}

EdgeId Graph::add_edge(VertexId tail, VertexId head, EdgeId origin) {
  if (!has_vertex(tail) || !has_vertex(head))
    fail(ErrorCode::InvalidArgument, "edge endpoint out of range");
  if (tail == head)
    fail(ErrorCode::InvalidArgument,
         "self-loop at vertex " + std::to_string(idx(tail)));
  if (find_edge(tail, head))
    fail(ErrorCode::InvalidArgument,
         "parallel edge " + std::to_string(idx(tail)) + "-" +
             std::to_string(idx(head)));
  const EdgeId e = eid(edges_.size());
  edges_.push_back({tail, head, origin});
  adjacency_[idx(tail)].push_back({e, head});
  adjacency_[idx(head)].push_back({e, tail});
  return e;
}

const Edge &Graph::edge(EdgeId e) const {
  if (!has_edge(e))
    fail(ErrorCode::InvalidArgument, "unknown edge " + std::to_string(idx(e)));
  return edges_[idx(e)];
}

const VertexInfo &Graph::info(VertexId v) const {
  if (!has_vertex(v))
    fail(ErrorCode::InvalidArgument,
         "unknown vertex " + std::to_string(idx(v)));
  return vertices_[idx(v)];
}

std::span<const Incidence> Graph::incident(VertexId v) const {
  if (!has_vertex(v))
    fail(ErrorCode::InvalidArgument,
         "unknown vertex " + std::to_string(idx(v)));
  return adjacency_[idx(v)];
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto &adj : adjacency_)
    best = std::max(best, adj.size());
  return best;
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  if (!has_vertex(a) || !has_vertex(b))
    return std::nullopt;
  const auto &adj = adjacency_[idx(a)].size() <= adjacency_[idx(b)].size()
                        ? adjacency_[idx(a)]
                        : adjacency_[idx(b)];
  const VertexId target = &adj == &adjacency_[idx(a)] ? b : a;
  for (const auto &inc : adj)
    if (inc.neighbor == target)
      return inc.edge;
  return std::nullopt;
}

VertexId Graph::other_end(EdgeId e, VertexId from) const {
  const Edge &ed = edge(e);
  if (ed.tail == from)
    return ed.head;
  if (ed.head == from)
    return ed.tail;
  fail(ErrorCode::InvalidArgument, "vertex " + std::to_string(idx(from)) +
                                       " is not an endpoint of edge " +
                                       std::to_string(idx(e)));
}

bool Graph::is_connected() const {
  if (vertices_.empty())
    return true;
  std::vector<char> seen(vertices_.size(), 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto &inc : adjacency_[v]) {
      const auto w = idx(inc.neighbor);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vertices_.size();
}

std::size_t Graph::real_vertex_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(vertices_.begin(), vertices_.end(), [](const auto &i) {
        return i.kind == VertexKind::Real;
      }));
}

VertexId Graph::subdivide(EdgeId e) {
  const Edge old = edge(e);
  const VertexId w = add_vertex({VertexKind::Dummy, old.origin});
  const EdgeId second = eid(edges_.size());

  edges_[idx(e)].head = w;
  for (auto &inc : adjacency_[idx(old.head)])
    if (inc.edge == e) {
      inc.edge = second;
      inc.neighbor = w;
    }
  for (auto &inc : adjacency_[idx(old.tail)])
    if (inc.edge == e)
      inc.neighbor = w;

  edges_.push_back({w, old.head, old.origin});
  adjacency_[idx(w)].push_back({e, old.tail});
  adjacency_[idx(w)].push_back({second, old.head});
  return w;
}

Cycle canonical(Cycle c) {
  auto &vs = c.vertices;
  if (vs.size() < 3)
    return c;
  const auto first = std::min_element(vs.begin(), vs.end());
  std::rotate(vs.begin(), first, vs.end());
  if (vs.back() < vs[1])
    std::reverse(vs.begin() + 1, vs.end());
  return c;
}

bool is_simple_cycle(const Graph &g, const Cycle &c) {
  const auto &vs = c.vertices;
  if (vs.size() < 3)
    return false;
  std::vector<VertexId> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!g.find_edge(vs[i], vs[(i + 1) % vs.size()]))
      return false;
  }
  return true;
}

std::vector<EdgeId> cycle_edges(const Graph &g, const Cycle &c) {
  if (!is_simple_cycle(g, c))
    fail(ErrorCode::InvalidArgument, "not a simple cycle of the graph");
  const auto &vs = c.vertices;
  std::vector<EdgeId> out;
  out.reserve(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    out.push_back(*g.find_edge(vs[i], vs[(i + 1) % vs.size()]));
  return out;
}

std::vector<BiconnectedComponent> biconnected_components(const Graph &g) {
  if (!g.is_connected())
    fail(ErrorCode::InvalidArgument, "graph must be connected");
  const std::size_t n = g.vertex_count();
  std::vector<BiconnectedComponent> out;
  if (n == 0)
    return out;

  constexpr std::uint32_t kUnseen = UINT32_MAX;
  std::vector<std::uint32_t> disc(n, kUnseen), low(n, 0);
  std::vector<EdgeId> edge_stack;
  struct Frame {
    VertexId v;
    EdgeId via;
    bool has_parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::uint32_t timer = 0;

  disc[0] = low[0] = timer++;
  stack.push_back({vid(0), EdgeId{}, false, 0});
  while (!stack.empty()) {
    Frame &f = stack.back();
    const auto adj = g.incident(f.v);
    if (f.next < adj.size()) {
      const Incidence inc = adj[f.next++];
      if (f.has_parent && inc.edge == f.via)
        continue;
      const auto w = idx(inc.neighbor);
      if (disc[w] == kUnseen) {
        edge_stack.push_back(inc.edge);
        disc[w] = low[w] = timer++;
        stack.push_back({inc.neighbor, inc.edge, true, 0});
      } else if (disc[w] < disc[idx(f.v)]) {
        edge_stack.push_back(inc.edge);
        low[idx(f.v)] = std::min(low[idx(f.v)], disc[w]);
      }
      continue;
    }
    const Frame done = f;
    stack.pop_back();
    if (!done.has_parent)
      continue;
    const auto parent = idx(stack.back().v);
    const auto child = idx(done.v);
    low[parent] = std::min(low[parent], low[child]);
    if (low[child] >= disc[parent]) {
      BiconnectedComponent comp;
      while (true) {
        const EdgeId e = edge_stack.back();
        edge_stack.pop_back();
        comp.edges.push_back(e);
        if (e == done.via)
          break;
      }
      std::sort(comp.edges.begin(), comp.edges.end());
      comp.trivial = comp.edges.size() == 1;
      out.push_back(std::move(comp));
    }
  }
  return out;
}

CycleSet cycle_basis(const Graph &g) {
  if (!g.is_connected())
    fail(ErrorCode::InvalidArgument, "graph must be connected");
  const std::size_t n = g.vertex_count();
  CycleSet out;
  if (n == 0)
    return out;

  constexpr std::uint32_t kNone = UINT32_MAX;
  std::vector<std::uint32_t> parent(n, kNone), depth(n, 0);
  std::vector<char> tree_edge(g.edge_count(), 0);
  std::vector<char> seen(n, 0);
  std::deque<std::uint32_t> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (const auto &inc : g.incident(vid(v))) {
      const auto w = idx(inc.neighbor);
      if (seen[w])
        continue;
      seen[w] = 1;
      parent[w] = v;
      depth[w] = depth[v] + 1;
      tree_edge[idx(inc.edge)] = 1;
      queue.push_back(w);
    }
  }

  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (tree_edge[i])
      continue;
    const Edge &e = g.edge(eid(i));
    std::vector<VertexId> up, down;
    auto a = idx(e.tail), b = idx(e.head);
    while (depth[a] > depth[b]) {
      up.push_back(vid(a));
      a = parent[a];
    }
    while (depth[b] > depth[a]) {
      down.push_back(vid(b));
      b = parent[b];
    }
    while (a != b) {
      up.push_back(vid(a));
      down.push_back(vid(b));
      a = parent[a];
      b = parent[b];
    }
    up.push_back(vid(a));
    up.insert(up.end(), down.rbegin(), down.rend());
    out.push_back(canonical(Cycle{std::move(up)}));
  }
  return out;
}

SubdivisionRecord::SubdivisionRecord(const Graph &input)
    : edges_(input.edge_count()), dummies_(input.edge_count()),
      owner_(input.edge_count()) {
  for (std::size_t i = 0; i < input.edge_count(); ++i) {
    edges_[i].push_back(eid(i));
    owner_[i] = eid(i);
  }
}

void SubdivisionRecord::apply(const SubdivisionStep &step) {
  const EdgeId orig = original_of(step.split);
  auto &chain = edges_[idx(orig)];
  auto &dummies = dummies_[idx(orig)];
  const auto pos = std::find(chain.begin(), chain.end(), step.split);
  const auto k = static_cast<std::size_t>(pos - chain.begin());
  // The chain runs tail to head of the input edge, and every piece keeps
  // that orientation, so the new piece and dummy go right after the split.
  chain.insert(chain.begin() + static_cast<std::ptrdiff_t>(k + 1),
               step.second);
  dummies.insert(dummies.begin() + static_cast<std::ptrdiff_t>(k),
                 step.dummy);
  if (owner_.size() <= idx(step.second))
    owner_.resize(idx(step.second) + 1);
  owner_[idx(step.second)] = orig;
  steps_.push_back(step);
  ++dummies_total_;
}

std::span<const EdgeId> SubdivisionRecord::edges_of(EdgeId original) const {
  if (idx(original) >= edges_.size())
    fail(ErrorCode::InvalidArgument,
         "unknown edge " + std::to_string(idx(original)));
  return edges_[idx(original)];
}

std::span<const VertexId>
SubdivisionRecord::dummies_of(EdgeId original) const {
  if (idx(original) >= dummies_.size())
    fail(ErrorCode::InvalidArgument,
         "unknown edge " + std::to_string(idx(original)));
  return dummies_[idx(original)];
}

EdgeId SubdivisionRecord::original_of(EdgeId e) const {
  if (idx(e) >= owner_.size())
    fail(ErrorCode::InvalidArgument, "unknown edge " + std::to_string(idx(e)));
  return owner_[idx(e)];
}

std::pair<Graph, SubdivisionStep> subdivide_edge(const Graph &g, EdgeId e) {
  if (!g.has_edge(e))
    fail(ErrorCode::InvalidArgument, "unknown edge " + std::to_string(idx(e)));
  Graph out = g;
  const Edge old = g.edge(e);
  const VertexId w = out.subdivide(e);
  SubdivisionStep step{e, w, e, eid(g.edge_count()), old.tail, old.head};
  return {std::move(out), step};
}

CycleSet rewrite_cycles(const CycleSet &cs, const SubdivisionStep &step) {
  CycleSet out;
  out.reserve(cs.size());
  for (const Cycle &c : cs) {
    const auto &vs = c.vertices;
    Cycle next;
    next.vertices.reserve(vs.size() + 1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const VertexId a = vs[i], b = vs[(i + 1) % vs.size()];
      next.vertices.push_back(a);
      if ((a == step.tail && b == step.head) ||
          (a == step.head && b == step.tail))
        next.vertices.push_back(step.dummy);
    }
    out.push_back(canonical(std::move(next)));
  }
  return out;
}

} // namespace orthosat
