/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orthosat/layout.hpp"

namespace orthosat {

struct MetricsReport {
  std::size_t bends = 0;
  std::size_t crossings = 0;
  double bends_deviation = 0.0;
  std::size_t max_bends = 0;
  std::int64_t area = 0;
  std::int64_t total_edge_length = 0;
  std::int64_t max_edge_length = 0;
  double edge_length_deviation = 0.0;
  double time_seconds = 0.0;

  bool operator==(const MetricsReport &) const = default;
};

inline constexpr std::array<std::string_view, 9> kMetricNames{
    "bends",           "crossings",         "bends_deviation",
    "max_bends",       "area",              "total_edge_length",
    "max_edge_length", "edge_length_deviation", "time_seconds"};

std::array<double, 9> metric_values(const MetricsReport &m);

// Number of interior turn points of a polyline.
std::size_t polyline_bends(std::span<const Point> line);
std::int64_t polyline_length(std::span<const Point> line);

// Proper crossings between polylines of distinct edges: a point inside a
// horizontal run of one and a vertical run of the other, counted once per
// (edge pair, point). Collinear overlaps do not count.
std::size_t count_crossings(std::span<const std::vector<Point>> polylines);

// Metrics over per-edge polylines; `points` are all drawn points (they
// define the bounding box).
MetricsReport compute_metrics(std::span<const std::vector<Point>> polylines,
                              std::span<const Point> points, double elapsed);
MetricsReport compute_metrics(const Drawing &d, double elapsed);

struct GapThresholds {
  double small = 8.0;   // gaps up to this stay inside one grid line
  double column = 15.0; // gaps from this start a new grid line
};

// Integer grid line per value. Values that are already consecutive integers
// are only translated to start at 0. Otherwise sorted values are split at
// every gap of at least `column`; a gap strictly between the thresholds, or
// a line spreading wider than `small`, is rejected.
std::vector<std::int64_t> normalize_axis(std::span<const double> values,
                                         const GapThresholds &t);

struct RawEdge {
  std::size_t source = 0; // index into RawDrawing::x / y
  std::size_t target = 0;
  std::vector<std::array<double, 2>> bends;
};

struct RawDrawing {
  std::vector<std::int64_t> ids;
  std::vector<double> x, y;
  std::vector<RawEdge> edges;
};

struct NormalizedDrawing {
  std::vector<std::int64_t> ids;
  std::vector<Point> vertices;
  std::vector<std::vector<Point>> polylines; // per edge, endpoints included
  std::vector<Point> points;                 // vertices then bends
};

NormalizedDrawing normalize_external(const RawDrawing &raw,
                                     const GapThresholds &t = {});

struct TrendFit {
  // Linear: b ~ c0 + c1 a. Quadratic: b ~ q0 + q1 a + q2 a^2.
  double c0 = 0.0, c1 = 0.0, r2 = 0.0;
  double q0 = 0.0, q1 = 0.0, q2 = 0.0, r2_quadratic = 0.0;
  bool degenerate = false; // too few distinct a values for the fit
};

TrendFit fit_trend(std::span<const double> a, std::span<const double> b);

struct MetricComparison {
  std::string metric;
  std::vector<std::array<double, 2>> pairs; // (value A, value B)
  TrendFit fit;
  // Lower is better: a win for B means B's value is smaller.
  double b_wins = 0.0, ties = 0.0, a_wins = 0.0; // percentages
};

struct NamedReport {
  std::string instance;
  MetricsReport metrics;
};

struct CompareReport {
  std::vector<std::string> instances;
  std::vector<MetricComparison> metrics;
};

// Pairs reports by instance name. Throws InvalidArgument when the two sets
// name different instances.
CompareReport batch_compare(std::span<const NamedReport> a,
                            std::span<const NamedReport> b);

} // namespace orthosat
