/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "orthosat/shape.hpp"

#include <string>

#include "orthosat/error.hpp"

namespace orthosat {

char to_char(Direction d) noexcept {
  static constexpr char kNames[] = {'L', 'R', 'D', 'U'};
  return kNames[idx(d)];
}

std::optional<Direction> direction_from_char(char c) noexcept {
  switch (c) {
  case 'L':
  case 'l':
    return Direction::L;
  case 'R':
  case 'r':
    return Direction::R;
  case 'D':
  case 'd':
    return Direction::D;
  case 'U':
  case 'u':
    return Direction::U;
  default:
    return std::nullopt;
  }
}

Direction Shape::label(EdgeId e) const {
  if (idx(e) >= labels_.size())
    fail(ErrorCode::InvalidArgument,
         "shape has no label for edge " + std::to_string(idx(e)));
  return labels_[idx(e)];
}

void Shape::set(EdgeId e, Direction d) {
  if (idx(e) >= labels_.size())
    fail(ErrorCode::InvalidArgument,
         "shape has no label for edge " + std::to_string(idx(e)));
  labels_[idx(e)] = d;
}

Direction Shape::from(const Graph &g, EdgeId e, VertexId from) const {
  const Edge &ed = g.edge(e);
  if (ed.tail == from)
    return label(e);
  if (ed.head == from)
    return opposite(label(e));
  fail(ErrorCode::InvalidArgument, "vertex " + std::to_string(idx(from)) +
                                       " is not an endpoint of edge " +
                                       std::to_string(idx(e)));
}

std::string Shape::to_string() const {
  std::string out;
  out.reserve(labels_.size());
  for (Direction d : labels_)
    out.push_back(to_char(d));
  return out;
}

std::optional<std::string> shape_violation(const Graph &g, const Shape &s) {
  if (s.size() != g.edge_count())
    return "shape has " + std::to_string(s.size()) + " labels for " +
           std::to_string(g.edge_count()) + " edges";
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const VertexId v = vid(i);
    const auto adj = g.incident(v);
    std::uint8_t seen = 0;
    for (const auto &inc : adj) {
      const std::uint8_t b = bit(s.from(g, inc.edge, v));
      if (adj.size() <= 4 && (seen & b))
        return "vertex " + std::to_string(i) +
               " has two edges leaving in direction " +
               std::string(1, to_char(s.from(g, inc.edge, v)));
      seen |= b;
    }
    if (adj.size() > 4 && seen != 0xF)
      return "vertex " + std::to_string(i) + " of degree " +
             std::to_string(adj.size()) + " does not use every direction";
  }
  return std::nullopt;
}

void validate_shape(const Graph &g, const Shape &s) {
  if (auto why = shape_violation(g, s))
    fail(ErrorCode::InvalidArgument, "invalid shape: " + *why);
}

Shape subdivide_shape(const Shape &s, const SubdivisionStep &step) {
  Shape out = s;
  if (out.size() != idx(step.second))
    fail(ErrorCode::InvalidArgument, "shape does not match subdivided graph");
  out.push_back(s.label(step.split));
  return out;
}

} // namespace orthosat
