/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <string>
#include <vector>

#include "orthosat/layout.hpp"

namespace orthosat {

struct SvgOptions {
  double unit = 40.0;   // pixels per grid unit
  double margin = 20.0; // pixels around the drawing
  // Edges that share a stretch of a box side are pushed apart by this many
  // pixels each, so the overlap stays visible. 0 draws exact coordinates.
  double stub_offset = 3.0;
  double vertex_radius = 5.0;
  bool vertex_labels = true;
};

// One <polyline> per input edge (attribute data-edge), one <circle> per
// real vertex, and a small square on every bend. Grid y grows upwards, so
// it is flipped on output.
std::string to_svg(const Drawing &d, const SvgOptions &opt = {});

struct PlotSeries {
  std::string name;
  std::vector<double> x, y;
};

// Static scatter or step plot with axes and tick labels.
std::string svg_scatter(const std::string &title, const std::string &x_label,
                        const std::string &y_label,
                        const std::vector<PlotSeries> &series,
                        bool diagonal = false);
// Empirical CDF of the values.
std::string svg_cdf(const std::string &title, const std::string &x_label,
                    std::vector<double> values);

} // namespace orthosat
