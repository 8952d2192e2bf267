/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "orthosat/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include <Eigen/Dense>

#include "orthosat/error.hpp"

namespace orthosat {

std::array<double, 9> metric_values(const MetricsReport &m) {
  return {static_cast<double>(m.bends),
          static_cast<double>(m.crossings),
          m.bends_deviation,
          static_cast<double>(m.max_bends),
          static_cast<double>(m.area),
          static_cast<double>(m.total_edge_length),
          static_cast<double>(m.max_edge_length),
          m.edge_length_deviation,
          m.time_seconds};
}

std::size_t polyline_bends(std::span<const Point> line) {
  std::size_t bends = 0;
  for (std::size_t i = 1; i + 1 < line.size(); ++i) {
    const bool in_h = line[i].y == line[i - 1].y;
    const bool out_h = line[i + 1].y == line[i].y;
    if (in_h != out_h)
      ++bends;
  }
  return bends;
}

std::int64_t polyline_length(std::span<const Point> line) {
  std::int64_t len = 0;
  for (std::size_t i = 1; i < line.size(); ++i)
    len += std::llabs(line[i].x - line[i - 1].x) +
           std::llabs(line[i].y - line[i - 1].y);
  return len;
}

namespace {

struct Run {
  std::int64_t at;     // y of a horizontal run, x of a vertical one
  std::int64_t lo, hi; // extent along the run
  std::size_t edge;
};

// Maximal straight runs of every polyline, split by orientation.
void collect_runs(std::span<const std::vector<Point>> polylines,
                  std::vector<Run> &horizontal, std::vector<Run> &vertical) {
  const auto flush = [&](Point a, Point b, std::size_t e) {
    if (a.y == b.y && a.x != b.x)
      horizontal.push_back({a.y, std::min(a.x, b.x), std::max(a.x, b.x), e});
    else if (a.x == b.x && a.y != b.y)
      vertical.push_back({a.x, std::min(a.y, b.y), std::max(a.y, b.y), e});
  };
  for (std::size_t e = 0; e < polylines.size(); ++e) {
    const auto &line = polylines[e];
    if (line.size() < 2)
      continue;
    std::size_t start = 0;
    for (std::size_t i = 1; i + 1 < line.size(); ++i) {
      const bool h1 = line[i].y == line[i - 1].y;
      const bool h2 = line[i + 1].y == line[i].y;
      if (h1 != h2) {
        flush(line[start], line[i], e);
        start = i;
      }
    }
    flush(line[start], line.back(), e);
  }
}

} // namespace

std::size_t count_crossings(std::span<const std::vector<Point>> polylines) {
  std::vector<Run> hs, vs;
  collect_runs(polylines, hs, vs);

  // Sweep over x. At each x: drop horizontals ending there, query the
  // verticals, then add horizontals starting there, so only open interiors
  // meet.
  struct Event {
    std::int64_t x;
    int kind; // 0 remove, 1 query, 2 insert
    std::size_t index;
  };
  std::vector<Event> events;
  for (std::size_t k = 0; k < hs.size(); ++k) {
    events.push_back({hs[k].lo, 2, k});
    events.push_back({hs[k].hi, 0, k});
  }
  for (std::size_t k = 0; k < vs.size(); ++k)
    events.push_back({vs[k].at, 1, k});
  std::sort(events.begin(), events.end(), [](const Event &a, const Event &b) {
    return std::tie(a.x, a.kind, a.index) < std::tie(b.x, b.kind, b.index);
  });

  std::multimap<std::int64_t, std::size_t> active; // y -> horizontal index
  std::set<std::tuple<std::size_t, std::size_t, std::int64_t, std::int64_t>>
      hits;
  for (const auto &ev : events) {
    if (ev.kind == 2) {
      active.emplace(hs[ev.index].at, ev.index);
    } else if (ev.kind == 0) {
      auto range = active.equal_range(hs[ev.index].at);
      for (auto it = range.first; it != range.second; ++it)
        if (it->second == ev.index) {
          active.erase(it);
          break;
        }
    } else {
      const Run &v = vs[ev.index];
      for (auto it = active.upper_bound(v.lo);
           it != active.end() && it->first < v.hi; ++it) {
        const Run &h = hs[it->second];
        if (h.edge == v.edge)
          continue;
        hits.emplace(std::min(h.edge, v.edge), std::max(h.edge, v.edge), v.at,
                     h.at);
      }
    }
  }
  return hits.size();
}

namespace {

double population_deviation(const std::vector<double> &values) {
  if (values.empty())
    return 0.0;
  double mean = 0.0;
  for (double v : values)
    mean += v;
  mean /= static_cast<double>(values.size());
  double var = 0.0;
  for (double v : values)
    var += (v - mean) * (v - mean);
  return std::sqrt(var / static_cast<double>(values.size()));
}

} // namespace

MetricsReport compute_metrics(std::span<const std::vector<Point>> polylines,
                              std::span<const Point> points, double elapsed) {
  MetricsReport m;
  m.time_seconds = elapsed;
  std::vector<double> bends, lengths;
  for (const auto &line : polylines) {
    const auto b = polyline_bends(line);
    const auto len = polyline_length(line);
    m.bends += b;
    m.max_bends = std::max(m.max_bends, b);
    m.total_edge_length += len;
    m.max_edge_length = std::max(m.max_edge_length, len);
    bends.push_back(static_cast<double>(b));
    lengths.push_back(static_cast<double>(len));
  }
  m.bends_deviation = population_deviation(bends);
  m.edge_length_deviation = population_deviation(lengths);
  if (!points.empty()) {
    const auto [xlo, xhi] = std::minmax_element(
        points.begin(), points.end(),
        [](const Point &a, const Point &b) { return a.x < b.x; });
    const auto [ylo, yhi] = std::minmax_element(
        points.begin(), points.end(),
        [](const Point &a, const Point &b) { return a.y < b.y; });
    m.area = (xhi->x - xlo->x + 1) * (yhi->y - ylo->y + 1);
  }
  m.crossings = count_crossings(polylines);
  return m;
}

MetricsReport compute_metrics(const Drawing &d, double elapsed) {
  std::vector<std::vector<Point>> lines;
  lines.reserve(d.routes.size());
  for (const auto &r : d.routes)
    lines.push_back(d.polyline(r));
  std::vector<Point> pts;
  pts.reserve(d.points.size());
  for (const auto &p : d.points)
    pts.push_back(p.at);
  return compute_metrics(lines, pts, elapsed);
}

std::vector<std::int64_t> normalize_axis(std::span<const double> values,
                                         const GapThresholds &t) {
  if (!(t.small >= 0.0) || !(t.column > t.small))
    fail(ErrorCode::InvalidArgument,
         "gap thresholds must satisfy 0 <= small < column");
  std::vector<std::int64_t> out(values.size());
  if (values.empty())
    return out;
  for (double v : values)
    if (!std::isfinite(v))
      fail(ErrorCode::InvalidArgument, "coordinate is not finite");

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  bool unit_grid = true;
  for (std::size_t k = 0; k < sorted.size() && unit_grid; ++k)
    unit_grid = sorted[k] == std::floor(sorted[k]) &&
                (k == 0 || sorted[k] - sorted[k - 1] == 1.0);
  if (unit_grid) {
    for (std::size_t k = 0; k < values.size(); ++k)
      out[k] = static_cast<std::int64_t>(values[k] - sorted.front());
    return out;
  }

  std::vector<std::int64_t> line_of(sorted.size());
  std::int64_t line = 0;
  double line_start = sorted.front();
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    const double gap = sorted[k] - sorted[k - 1];
    if (gap >= t.column) {
      ++line;
      line_start = sorted[k];
    } else if (gap > t.small) {
      fail(ErrorCode::InvalidArgument,
           "ambiguous gap of " + std::to_string(gap) + " between " +
               std::to_string(sorted[k - 1]) + " and " +
               std::to_string(sorted[k]));
    } else if (sorted[k] - line_start > t.small) {
      fail(ErrorCode::InvalidArgument,
           "grid line starting at " + std::to_string(line_start) +
               " spreads over " + std::to_string(sorted[k] - line_start));
    }
    line_of[k] = line;
  }
  for (std::size_t k = 0; k < values.size(); ++k) {
    const auto pos = std::lower_bound(sorted.begin(), sorted.end(), values[k]);
    out[k] = line_of[static_cast<std::size_t>(pos - sorted.begin())];
  }
  return out;
}

NormalizedDrawing normalize_external(const RawDrawing &raw,
                                     const GapThresholds &t) {
  if (raw.x.size() != raw.y.size() || raw.ids.size() != raw.x.size())
    fail(ErrorCode::InvalidArgument, "coordinate arrays differ in length");
  std::vector<double> xs = raw.x, ys = raw.y;
  for (const auto &e : raw.edges) {
    if (e.source >= raw.x.size() || e.target >= raw.x.size())
      fail(ErrorCode::InvalidArgument, "edge endpoint out of range");
    for (const auto &b : e.bends) {
      xs.push_back(b[0]);
      ys.push_back(b[1]);
    }
  }
  const auto gx = normalize_axis(xs, t);
  const auto gy = normalize_axis(ys, t);

  NormalizedDrawing out;
  out.ids = raw.ids;
  const std::size_t n = raw.x.size();
  for (std::size_t k = 0; k < n; ++k)
    out.vertices.push_back({gx[k], gy[k]});
  out.points = out.vertices;
  std::size_t next = n;
  for (const auto &e : raw.edges) {
    std::vector<Point> line{out.vertices[e.source]};
    for (std::size_t b = 0; b < e.bends.size(); ++b, ++next) {
      const Point p{gx[next], gy[next]};
      line.push_back(p);
      out.points.push_back(p);
    }
    line.push_back(out.vertices[e.target]);
    out.polylines.push_back(std::move(line));
  }
  return out;
}

TrendFit fit_trend(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    fail(ErrorCode::InvalidArgument, "fit inputs differ in length");
  TrendFit f;
  const auto n = static_cast<Eigen::Index>(a.size());
  std::vector<double> distinct(a.begin(), a.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i)
    y(i) = b[static_cast<std::size_t>(i)];
  const double mean = n ? y.mean() : 0.0;
  const double ss_tot = (y.array() - mean).square().sum();
  const auto r2 = [&](const Eigen::VectorXd &pred) {
    const double ss_res = (y - pred).squaredNorm();
    return ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : (ss_res == 0.0 ? 1.0 : 0.0);
  };

  if (distinct.size() < 2) {
    f.degenerate = true;
    f.c0 = f.q0 = n ? mean : 0.0;
    f.r2 = f.r2_quadratic = ss_tot > 0.0 ? 0.0 : 1.0;
    return f;
  }
  Eigen::MatrixXd lin(n, 2);
  for (Eigen::Index i = 0; i < n; ++i)
    lin.row(i) << 1.0, a[static_cast<std::size_t>(i)];
  const Eigen::VectorXd cl = lin.colPivHouseholderQr().solve(y);
  f.c0 = cl(0);
  f.c1 = cl(1);
  f.r2 = r2(lin * cl);

  if (distinct.size() < 3) {
    f.degenerate = true;
    f.q0 = f.c0;
    f.q1 = f.c1;
    f.r2_quadratic = f.r2;
    return f;
  }
  Eigen::MatrixXd quad(n, 3);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double v = a[static_cast<std::size_t>(i)];
    quad.row(i) << 1.0, v, v * v;
  }
  const Eigen::VectorXd cq = quad.colPivHouseholderQr().solve(y);
  f.q0 = cq(0);
  f.q1 = cq(1);
  f.q2 = cq(2);
  f.r2_quadratic = r2(quad * cq);
  return f;
}

CompareReport batch_compare(std::span<const NamedReport> a,
                            std::span<const NamedReport> b) {
  std::map<std::string, const MetricsReport *> by_name;
  for (const auto &r : b)
    if (!by_name.emplace(r.instance, &r.metrics).second)
      fail(ErrorCode::InvalidArgument,
           "instance '" + r.instance + "' appears twice");
  if (a.size() != b.size())
    fail(ErrorCode::InvalidArgument, "report sets have different sizes");

  CompareReport out;
  std::vector<std::array<double, 9>> va, vb;
  std::set<std::string> seen;
  for (const auto &r : a) {
    const auto it = by_name.find(r.instance);
    if (it == by_name.end())
      fail(ErrorCode::InvalidArgument,
           "instance '" + r.instance + "' missing from the second set");
    if (!seen.insert(r.instance).second)
      fail(ErrorCode::InvalidArgument,
           "instance '" + r.instance + "' appears twice");
    out.instances.push_back(r.instance);
    va.push_back(metric_values(r.metrics));
    vb.push_back(metric_values(*it->second));
  }

  for (std::size_t k = 0; k < kMetricNames.size(); ++k) {
    MetricComparison c;
    c.metric = std::string(kMetricNames[k]);
    std::vector<double> xs, ys;
    std::size_t wins_b = 0, wins_a = 0, ties = 0;
    for (std::size_t i = 0; i < va.size(); ++i) {
      c.pairs.push_back({va[i][k], vb[i][k]});
      xs.push_back(va[i][k]);
      ys.push_back(vb[i][k]);
      if (vb[i][k] < va[i][k])
        ++wins_b;
      else if (va[i][k] < vb[i][k])
        ++wins_a;
      else
        ++ties;
    }
    const double total = va.empty() ? 1.0 : static_cast<double>(va.size());
    c.b_wins = 100.0 * static_cast<double>(wins_b) / total;
    c.a_wins = 100.0 * static_cast<double>(wins_a) / total;
    c.ties = 100.0 * static_cast<double>(ties) / total;
    c.fit = fit_trend(xs, ys);
    out.metrics.push_back(std::move(c));
  }
  return out;
}

} // namespace orthosat
