/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "orthosat/layout.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "orthosat/error.hpp"

namespace orthosat {

using enum Direction;

ExpandedGraph expand_high_degree(const Graph &g, const Shape &s) {
  validate_shape(g, s);
  ExpandedGraph x;
  x.source_vertices = g.vertex_count();
  x.source_edges = g.edge_count();
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    x.graph.add_vertex(g.info(vid(i)));
    x.owner.push_back(vid(i));
  }

  // attach[e][0] / attach[e][1]: expanded vertex carrying e's tail / head.
  std::vector<std::array<VertexId, 2>> attach(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    attach[i] = {g.edge(eid(i)).tail, g.edge(eid(i)).head};
  const auto reattach = [&](EdgeId e, VertexId v, VertexId port) {
    attach[idx(e)][g.edge(e).tail == v ? 0 : 1] = port;
  };
  const auto new_port = [&](VertexId v) {
    const VertexId p = x.graph.add_vertex(g.info(v));
    x.owner.push_back(v);
    return p;
  };

  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const VertexId v = vid(i);
    if (g.degree(v) <= 4)
      continue;
    BoxPlan box;
    box.vertex = v;
    for (const auto &inc : g.incident(v))
      box.sides[idx(s.from(g, inc.edge, v))].push_back(inc.edge);
    for (auto &side : box.sides)
      std::sort(side.begin(), side.end());

    std::vector<EdgeId> up_extras, right_extras;
    for (Direction d : {R, L})
      up_extras.insert(up_extras.end(), box.sides[idx(d)].begin() + 1,
                       box.sides[idx(d)].end());
    for (Direction d : {U, D})
      right_extras.insert(right_extras.end(), box.sides[idx(d)].begin() + 1,
                          box.sides[idx(d)].end());
    for (EdgeId e : up_extras) {
      box.vertical_ports.push_back(new_port(v));
      reattach(e, v, box.vertical_ports.back());
    }
    if (!box.vertical_ports.empty())
      reattach(box.sides[idx(U)][0], v, box.vertical_ports.back());
    for (EdgeId e : right_extras) {
      box.horizontal_ports.push_back(new_port(v));
      reattach(e, v, box.horizontal_ports.back());
    }
    if (!box.horizontal_ports.empty())
      reattach(box.sides[idx(R)][0], v, box.horizontal_ports.back());
    x.plan.boxes.push_back(std::move(box));
  }

  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    x.graph.add_edge(attach[i][0], attach[i][1], g.edge(eid(i)).origin);
    x.shape.push_back(s.label(eid(i)));
  }
  // Position of every port along its chain, for route reconstruction.
  std::vector<std::pair<const std::vector<VertexId> *, std::size_t>> chain_of(
      x.graph.vertex_count(), {nullptr, 0});
  for (const auto &box : x.plan.boxes) {
    VertexId prev = box.vertex;
    for (std::size_t k = 0; k < box.vertical_ports.size(); ++k) {
      x.graph.add_edge(prev, box.vertical_ports[k], kNoEdge);
      x.shape.push_back(U);
      prev = box.vertical_ports[k];
      chain_of[idx(prev)] = {&box.vertical_ports, k};
    }
    prev = box.vertex;
    for (std::size_t k = 0; k < box.horizontal_ports.size(); ++k) {
      x.graph.add_edge(prev, box.horizontal_ports[k], kNoEdge);
      x.shape.push_back(R);
      prev = box.horizontal_ports[k];
      chain_of[idx(prev)] = {&box.horizontal_ports, k};
    }
  }

  // Walk from a source vertex out along its chain to the attaching port.
  const auto stem = [&](VertexId port) {
    std::vector<VertexId> out{x.owner[idx(port)]};
    const auto [chain, k] = chain_of[idx(port)];
    if (chain)
      out.insert(out.end(), chain->begin(),
                 chain->begin() + static_cast<std::ptrdiff_t>(k + 1));
    return out;
  };
  x.routes.resize(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    auto route = stem(attach[i][0]);
    auto tail_end = stem(attach[i][1]);
    route.insert(route.end(), tail_end.rbegin(), tail_end.rend());
    x.routes[i] = std::move(route);
  }
  validate_shape(x.graph, x.shape);
  return x;
}

Cycle contract_cycle(const ExpandedGraph &x, const Cycle &c) {
  std::vector<VertexId> walk;
  for (VertexId v : c.vertices) {
    const VertexId o = x.owner[idx(v)];
    if (walk.empty() || walk.back() != o)
      walk.push_back(o);
  }
  while (walk.size() > 1 && walk.back() == walk.front())
    walk.pop_back();

  std::map<VertexId, std::size_t> first_seen;
  for (std::size_t j = 0; j < walk.size(); ++j) {
    const auto [it, fresh] = first_seen.emplace(walk[j], j);
    if (!fresh) {
      Cycle piece{{walk.begin() + static_cast<std::ptrdiff_t>(it->second),
                   walk.begin() + static_cast<std::ptrdiff_t>(j)}};
      return canonical(std::move(piece));
    }
  }
  return canonical(Cycle{std::move(walk)});
}

std::vector<Point> Drawing::polyline(const EdgeRoute &r) const {
  std::vector<Point> out;
  out.reserve(r.points.size());
  for (auto p : r.points)
    out.push_back(points.at(p).at);
  return out;
}

namespace {

struct Span {
  std::int64_t lo = INT64_MAX;
  std::int64_t hi = INT64_MIN;
};

// Longest-path layers in the fixed topological order, honouring both the
// auxiliary arcs and the separation arcs added so far.
std::vector<std::int64_t>
layers(const AuxiliaryGraph &a, const std::vector<std::uint32_t> &order,
       const std::vector<std::vector<std::uint32_t>> &extra) {
  std::vector<std::int64_t> layer(a.nodes.size(), 0);
  for (auto n : order) {
    for (auto ai : a.out[n]) {
      auto &t = layer[a.arcs[ai].to];
      t = std::max(t, layer[n] + 1);
    }
    for (auto to : extra[n])
      layer[to] = std::max(layer[to], layer[n] + 1);
  }
  return layer;
}

// Adds a separation arc for each pair of classes sharing a line whose spans
// along that line overlap. Returns the number of arcs added.
std::size_t separate(const AuxiliaryGraph &a,
                     const std::vector<std::int64_t> &layer,
                     const std::vector<std::int64_t> &other,
                     const std::vector<std::uint32_t> &rank,
                     std::vector<std::vector<std::uint32_t>> &extra) {
  std::vector<Span> span(a.nodes.size());
  for (std::uint32_t n = 0; n < a.nodes.size(); ++n)
    for (VertexId v : a.nodes[n]) {
      span[n].lo = std::min(span[n].lo, other[idx(v)]);
      span[n].hi = std::max(span[n].hi, other[idx(v)]);
    }
  std::vector<std::uint32_t> byline(a.nodes.size());
  for (std::uint32_t n = 0; n < byline.size(); ++n)
    byline[n] = n;
  std::sort(byline.begin(), byline.end(), [&](auto p, auto q) {
    if (layer[p] != layer[q])
      return layer[p] < layer[q];
    if (span[p].lo != span[q].lo)
      return span[p].lo < span[q].lo;
    return p < q;
  });
  std::size_t added = 0;
  std::size_t i = 0;
  while (i < byline.size()) {
    std::size_t j = i;
    while (j < byline.size() && layer[byline[j]] == layer[byline[i]])
      ++j;
    // Within one line, sorted by span start: each class is checked against
    // the class reaching furthest so far.
    std::uint32_t reach = byline[i];
    for (std::size_t k = i + 1; k < j; ++k) {
      const auto n = byline[k];
      if (span[n].lo <= span[reach].hi) {
        const bool fwd = rank[reach] < rank[n];
        extra[fwd ? reach : n].push_back(fwd ? n : reach);
        ++added;
      }
      if (span[n].hi > span[reach].hi)
        reach = n;
    }
    i = j;
  }
  return added;
}

} // namespace

std::vector<Point> assign_coordinates(const Graph &g, const Shape &s,
                                      const TopologicalOrders &orders) {
  if (g.max_degree() > 4)
    fail(ErrorCode::InvalidArgument,
         "coordinates need an expanded graph of degree at most 4");
  const auto &gx = orders.gx, &gy = orders.gy;
  if (orders.x.size() != gx.nodes.size() || orders.y.size() != gy.nodes.size())
    fail(ErrorCode::InvalidArgument, "auxiliary graphs are not acyclic");
  if (gx.node_of.size() != g.vertex_count() ||
      gy.node_of.size() != g.vertex_count() || s.size() != g.edge_count())
    fail(ErrorCode::InvalidArgument, "orders do not match the graph");

  std::vector<std::uint32_t> rank_x(gx.nodes.size()), rank_y(gy.nodes.size());
  for (std::uint32_t k = 0; k < orders.x.size(); ++k)
    rank_x[orders.x[k]] = k;
  for (std::uint32_t k = 0; k < orders.y.size(); ++k)
    rank_y[orders.y[k]] = k;
  std::vector<std::vector<std::uint32_t>> extra_x(gx.nodes.size()),
      extra_y(gy.nodes.size());

  std::vector<std::int64_t> vx(g.vertex_count()), vy(g.vertex_count());
  while (true) {
    const auto lx = layers(gx, orders.x, extra_x);
    const auto ly = layers(gy, orders.y, extra_y);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      vx[v] = lx[gx.node_of[v]];
      vy[v] = ly[gy.node_of[v]];
    }
    std::size_t added = separate(gx, lx, vy, rank_x, extra_x);
    added += separate(gy, ly, vx, rank_y, extra_y);
    if (added == 0)
      break;
  }
  std::vector<Point> out(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    out[v] = {vx[v], vy[v]};
  return out;
}

Drawing draw(const ExpandedGraph &x, const TopologicalOrders &orders) {
  const auto coords = assign_coordinates(x.graph, x.shape, orders);
  Drawing d;
  d.points.resize(x.graph.vertex_count());
  for (std::size_t v = 0; v < x.graph.vertex_count(); ++v) {
    auto &p = d.points[v];
    p.at = coords[v];
    p.vertex = x.owner[v];
    if (v >= x.source_vertices)
      p.kind = PointKind::Port;
    else if (x.graph.info(vid(v)).kind == VertexKind::Dummy)
      p.kind = PointKind::Dummy;
  }
  for (std::size_t i = 0; i < x.graph.edge_count(); ++i) {
    const Edge &e = x.graph.edge(eid(i));
    d.segments.push_back({idx(e.tail), idx(e.head), x.shape.label(eid(i))});
  }
  for (std::size_t v = 0; v < x.source_vertices; ++v) {
    if (d.points[v].kind != PointKind::Dummy)
      continue;
    const auto adj = x.graph.incident(vid(v));
    if (adj.size() == 2)
      d.points[v].bend = is_horizontal(x.shape.label(adj[0].edge)) !=
                         is_horizontal(x.shape.label(adj[1].edge));
  }

  // One route per input edge: follow the pieces sharing its origin from
  // the tail of the piece that kept the input edge's id.
  const Graph &g = x.graph;
  for (std::size_t i = 0; i < x.source_edges; ++i) {
    const EdgeId o = g.edge(eid(i)).origin;
    if (o != eid(i))
      continue;
    EdgeRoute r;
    r.edge = o;
    EdgeId piece = o;
    VertexId at = x.routes[i].front();
    while (true) {
      auto walk = x.routes[idx(piece)];
      if (walk.front() != at)
        std::reverse(walk.begin(), walk.end());
      for (VertexId v : walk)
        if (r.points.empty() || r.points.back() != idx(v))
          r.points.push_back(idx(v));
      at = walk.back();
      if (idx(at) >= x.source_vertices ||
          g.info(at).kind != VertexKind::Dummy || g.info(at).parent != o)
        break;
      EdgeId next = piece;
      for (const auto &inc : g.incident(at))
        if (inc.edge != piece && idx(inc.edge) < x.source_edges)
          next = inc.edge;
      if (next == piece)
        fail(ErrorCode::Internal, "broken subdivision chain");
      piece = next;
    }
    d.routes.push_back(std::move(r));
  }
  return d;
}

Drawing draw(const Graph &g, const Shape &s) {
  const ExpandedGraph x = expand_high_degree(g, s);
  auto result = test_drawable(x.graph, x.shape);
  if (!is_drawable(result))
    fail(ErrorCode::InvalidArgument, "shape is not rectilinear drawable");
  return draw(x, std::get<TopologicalOrders>(result));
}

std::vector<std::string> drawing_violations(const Drawing &d) {
  std::vector<std::string> out;
  const auto name = [&](std::uint32_t p) {
    return "point " + std::to_string(p) + " (" +
           std::to_string(d.points[p].at.x) + "," +
           std::to_string(d.points[p].at.y) + ")";
  };

  std::map<Point, std::uint32_t> where;
  for (std::uint32_t p = 0; p < d.points.size(); ++p) {
    const auto [it, fresh] = where.emplace(d.points[p].at, p);
    if (!fresh)
      out.push_back(name(p) + " coincides with " + name(it->second));
  }

  for (std::size_t k = 0; k < d.segments.size(); ++k) {
    const auto &seg = d.segments[k];
    if (seg.from >= d.points.size() || seg.to >= d.points.size()) {
      out.push_back("segment " + std::to_string(k) + " has a missing endpoint");
      continue;
    }
    const Point a = d.points[seg.from].at, b = d.points[seg.to].at;
    const std::int64_t dx = b.x - a.x, dy = b.y - a.y;
    bool ok = false;
    switch (seg.label) {
    case L:
      ok = dx < 0 && dy == 0;
      break;
    case R:
      ok = dx > 0 && dy == 0;
      break;
    case D:
      ok = dy < 0 && dx == 0;
      break;
    case U:
      ok = dy > 0 && dx == 0;
      break;
    }
    if (!ok) {
      out.push_back("segment " + std::to_string(k) + " from " +
                    name(seg.from) + " to " + name(seg.to) +
                    " does not point " + std::string(1, to_char(seg.label)));
      continue;
    }
    const Point lo = std::min(a, b), hi = std::max(a, b);
    for (auto it = where.upper_bound(lo); it != where.end() && it->first < hi;
         ++it) {
      const Point p = it->first;
      if ((dx == 0 && p.x == lo.x) || (dy == 0 && p.y == lo.y))
        out.push_back(name(it->second) + " lies inside segment " +
                      std::to_string(k));
    }
  }

  if (!d.points.empty()) {
    std::int64_t xmax = INT64_MIN, ymax = INT64_MIN;
    std::int64_t xmin = INT64_MAX, ymin = INT64_MAX;
    for (const auto &p : d.points) {
      xmax = std::max(xmax, p.at.x);
      ymax = std::max(ymax, p.at.y);
      xmin = std::min(xmin, p.at.x);
      ymin = std::min(ymin, p.at.y);
    }
    if (xmin != 0 || ymin != 0)
      out.push_back("drawing does not start at the origin");
    std::vector<char> col(static_cast<std::size_t>(xmax - xmin + 1), 0),
        row(static_cast<std::size_t>(ymax - ymin + 1), 0);
    for (const auto &p : d.points) {
      col[static_cast<std::size_t>(p.at.x - xmin)] = 1;
      row[static_cast<std::size_t>(p.at.y - ymin)] = 1;
    }
    for (std::size_t c = 0; c < col.size(); ++c)
      if (!col[c])
        out.push_back("column " + std::to_string(c) + " is empty");
    for (std::size_t r = 0; r < row.size(); ++r)
      if (!row[r])
        out.push_back("row " + std::to_string(r) + " is empty");
  }
  return out;
}

double StraightenReport::bend_ratio() const noexcept {
  const std::size_t total = bends.size() + straight.size();
  return total == 0 ? 1.0
                    : static_cast<double>(bends.size()) /
                          static_cast<double>(total);
}

StraightenReport straighten_report(const Drawing &d) {
  StraightenReport r;
  for (std::uint32_t p = 0; p < d.points.size(); ++p) {
    if (d.points[p].kind != PointKind::Dummy)
      continue;
    (d.points[p].bend ? r.bends : r.straight).push_back(vid(p));
  }
  return r;
}

} // namespace orthosat
