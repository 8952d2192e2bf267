/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orthosat/graph.hpp"

namespace orthosat {

// Direction of an edge when walked along its reference orientation.
enum class Direction : std::uint8_t { L = 0, R = 1, D = 2, U = 3 };

inline constexpr std::array<Direction, 4> kDirections{
    Direction::L, Direction::R, Direction::D, Direction::U};

constexpr std::uint8_t idx(Direction d) noexcept {
  return static_cast<std::uint8_t>(d);
}
constexpr Direction opposite(Direction d) noexcept {
  return static_cast<Direction>(idx(d) ^ 1u);
}
constexpr bool is_horizontal(Direction d) noexcept {
  return d == Direction::L || d == Direction::R;
}
constexpr std::uint8_t bit(Direction d) noexcept {
  return static_cast<std::uint8_t>(1u << idx(d));
}

char to_char(Direction d) noexcept;
std::optional<Direction> direction_from_char(char c) noexcept;

class Shape {
public:
  Shape() = default;
  explicit Shape(std::vector<Direction> labels) : labels_(std::move(labels)) {}
  Shape(std::size_t edge_count, Direction fill) : labels_(edge_count, fill) {}

  std::size_t size() const noexcept { return labels_.size(); }
  Direction label(EdgeId e) const;
  void set(EdgeId e, Direction d);
  void push_back(Direction d) { labels_.push_back(d); }

  // Label of e read when walking from `from` to the other endpoint.
  Direction from(const Graph &g, EdgeId e, VertexId from) const;

  const std::vector<Direction> &labels() const noexcept { return labels_; }
  std::string to_string() const;

  bool operator==(const Shape &) const = default;

private:
  std::vector<Direction> labels_;
};

// Empty when s is a valid shape of g, else a description of the first
// violation found.
std::optional<std::string> shape_violation(const Graph &g, const Shape &s);
void validate_shape(const Graph &g, const Shape &s);

// A subdivision keeps the label of the split edge on both pieces.
Shape subdivide_shape(const Shape &s, const SubdivisionStep &step);

struct ShapedGraph {
  Graph graph;
  Shape shape;
};

} // namespace orthosat
