/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "orthosat/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <utility>

namespace orthosat {

namespace {

std::string num(double v) {
  if (std::abs(v) < 5e-7)
    v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string escape(const std::string &s) {
  std::string out;
  for (char c : s) {
    switch (c) {
    case '&':
      out += "&amp;";
      break;
    case '<':
      out += "&lt;";
      break;
    case '>':
      out += "&gt;";
      break;
    case '"':
      out += "&quot;";
      break;
    default:
      out += c;
    }
  }
  return out;
}

const char *kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#17becf"};

} // namespace

std::string to_svg(const Drawing &d, const SvgOptions &opt) {
  std::int64_t xmax = 0, ymax = 0;
  for (const auto &p : d.points) {
    xmax = std::max(xmax, p.at.x);
    ymax = std::max(ymax, p.at.y);
  }
  const double width = 2 * opt.margin + opt.unit * static_cast<double>(xmax);
  const double height = 2 * opt.margin + opt.unit * static_cast<double>(ymax);
  const auto px = [&](double x) { return opt.margin + opt.unit * x; };
  const auto py = [&](double y) {
    return opt.margin + opt.unit * (static_cast<double>(ymax) - y);
  };

  // Rank of each route on every drawn segment it shares with earlier routes.
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> users;
  std::vector<std::vector<int>> rank(d.routes.size());
  for (std::size_t r = 0; r < d.routes.size(); ++r) {
    const auto &pts = d.routes[r].points;
    for (std::size_t k = 1; k < pts.size(); ++k) {
      const auto key = std::minmax(pts[k - 1], pts[k]);
      rank[r].push_back(users[key]++);
    }
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
         "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) +
         " " + num(height) + "\">\n";
  out += "<g fill=\"none\" stroke=\"#333\" stroke-width=\"1.5\">\n";
  for (std::size_t r = 0; r < d.routes.size(); ++r) {
    const auto line = d.polyline(d.routes[r]);
    std::vector<double> dx(line.size(), 0.0), dy(line.size(), 0.0);
    for (std::size_t k = 1; k < line.size(); ++k) {
      const double shift = opt.stub_offset * rank[r][k - 1];
      if (shift == 0.0)
        continue;
      if (line[k].y == line[k - 1].y) {
        dy[k - 1] = std::max(dy[k - 1], shift);
        dy[k] = std::max(dy[k], shift);
      } else {
        dx[k - 1] = std::max(dx[k - 1], shift);
        dx[k] = std::max(dx[k], shift);
      }
    }
    out += "<polyline data-edge=\"" + std::to_string(idx(d.routes[r].edge)) +
           "\" points=\"";
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (k)
        out += ' ';
      out += num(px(static_cast<double>(line[k].x)) + dx[k]) + "," +
             num(py(static_cast<double>(line[k].y)) - dy[k]);
    }
    out += "\"/>\n";
  }
  out += "</g>\n";

  const double half = opt.vertex_radius * 0.6;
  out += "<g fill=\"#c00\" stroke=\"none\">\n";
  for (const auto &p : d.points)
    if (p.kind == PointKind::Dummy && p.bend)
      out += "<rect x=\"" + num(px(static_cast<double>(p.at.x)) - half / 2) +
             "\" y=\"" + num(py(static_cast<double>(p.at.y)) - half / 2) +
             "\" width=\"" + num(half) + "\" height=\"" + num(half) +
             "\"/>\n";
  out += "</g>\n";

  out += "<g fill=\"#fff\" stroke=\"#000\" stroke-width=\"1.5\">\n";
  for (const auto &p : d.points)
    if (p.kind == PointKind::Vertex)
      out += "<circle data-vertex=\"" + std::to_string(idx(p.vertex)) +
             "\" cx=\"" + num(px(static_cast<double>(p.at.x))) + "\" cy=\"" +
             num(py(static_cast<double>(p.at.y))) + "\" r=\"" +
             num(opt.vertex_radius) + "\"/>\n";
  out += "</g>\n";

  if (opt.vertex_labels) {
    out += "<g font-family=\"sans-serif\" font-size=\"10\" fill=\"#000\">\n";
    for (const auto &p : d.points)
      if (p.kind == PointKind::Vertex)
        out += "<text x=\"" +
               num(px(static_cast<double>(p.at.x)) + opt.vertex_radius + 1) +
               "\" y=\"" +
               num(py(static_cast<double>(p.at.y)) - opt.vertex_radius - 1) +
               "\">" + std::to_string(idx(p.vertex)) + "</text>\n";
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string svg_scatter(const std::string &title, const std::string &x_label,
                        const std::string &y_label,
                        const std::vector<PlotSeries> &series, bool diagonal) {
  const double w = 480, h = 360, left = 60, right = 20, top = 30, bottom = 50;
  double xlo = 0, xhi = 1, ylo = 0, yhi = 1;
  bool first = true;
  for (const auto &s : series)
    for (std::size_t k = 0; k < s.x.size() && k < s.y.size(); ++k) {
      if (first) {
        xlo = xhi = s.x[k];
        ylo = yhi = s.y[k];
        first = false;
      }
      xlo = std::min(xlo, s.x[k]);
      xhi = std::max(xhi, s.x[k]);
      ylo = std::min(ylo, s.y[k]);
      yhi = std::max(yhi, s.y[k]);
    }
  if (diagonal) {
    xlo = ylo = std::min(xlo, ylo);
    xhi = yhi = std::max(xhi, yhi);
  }
  if (xhi == xlo)
    xhi = xlo + 1;
  if (yhi == ylo)
    yhi = ylo + 1;
  const auto sx = [&](double v) {
    return left + (v - xlo) / (xhi - xlo) * (w - left - right);
  };
  const auto sy = [&](double v) {
    return h - bottom - (v - ylo) / (yhi - ylo) * (h - top - bottom);
  };

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) +
         "\" height=\"" + num(h) + "\" font-family=\"sans-serif\" "
         "font-size=\"11\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
  out += "<text x=\"" + num(w / 2) + "\" y=\"18\" text-anchor=\"middle\">" +
         escape(title) + "</text>\n";
  out += "<g stroke=\"#000\">\n<line x1=\"" + num(left) + "\" y1=\"" +
         num(h - bottom) + "\" x2=\"" + num(w - right) + "\" y2=\"" +
         num(h - bottom) + "\"/>\n<line x1=\"" + num(left) + "\" y1=\"" +
         num(top) + "\" x2=\"" + num(left) + "\" y2=\"" + num(h - bottom) +
         "\"/>\n</g>\n";
  for (int t = 0; t <= 4; ++t) {
    const double vx = xlo + (xhi - xlo) * t / 4.0;
    const double vy = ylo + (yhi - ylo) * t / 4.0;
    out += "<text x=\"" + num(sx(vx)) + "\" y=\"" + num(h - bottom + 15) +
           "\" text-anchor=\"middle\">" + num(vx) + "</text>\n";
    out += "<text x=\"" + num(left - 5) + "\" y=\"" + num(sy(vy) + 4) +
           "\" text-anchor=\"end\">" + num(vy) + "</text>\n";
  }
  out += "<text x=\"" + num((left + w - right) / 2) + "\" y=\"" + num(h - 12) +
         "\" text-anchor=\"middle\">" + escape(x_label) + "</text>\n";
  out += "<text transform=\"translate(14," + num((top + h - bottom) / 2) +
         ") rotate(-90)\" text-anchor=\"middle\">" + escape(y_label) +
         "</text>\n";
  if (diagonal)
    out += "<line stroke=\"#999\" stroke-dasharray=\"4 3\" x1=\"" +
           num(sx(xlo)) + "\" y1=\"" + num(sy(ylo)) + "\" x2=\"" +
           num(sx(xhi)) + "\" y2=\"" + num(sy(yhi)) + "\"/>\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char *color = kPalette[s % std::size(kPalette)];
    out += "<g fill=\"" + std::string(color) + "\" fill-opacity=\"0.6\">\n";
    for (std::size_t k = 0; k < series[s].x.size() && k < series[s].y.size();
         ++k)
      out += "<circle cx=\"" + num(sx(series[s].x[k])) + "\" cy=\"" +
             num(sy(series[s].y[k])) + "\" r=\"2.5\"/>\n";
    out += "</g>\n";
    if (!series[s].name.empty())
      out += "<text x=\"" + num(w - right - 5) + "\" y=\"" +
             num(top + 14.0 * static_cast<double>(s + 1)) +
             "\" text-anchor=\"end\" fill=\"" + color + "\">" +
             escape(series[s].name) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string svg_cdf(const std::string &title, const std::string &x_label,
                    std::vector<double> values) {
  std::sort(values.begin(), values.end());
  PlotSeries s;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k + 1 < values.size() && values[k + 1] == values[k])
      continue;
    s.x.push_back(values[k]);
    s.y.push_back(static_cast<double>(k + 1) /
                  static_cast<double>(values.size()));
  }
  return svg_scatter(title, x_label, "fraction of instances", {s});
}

} // namespace orthosat
