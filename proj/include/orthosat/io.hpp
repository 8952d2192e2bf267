/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "orthosat/graph.hpp"
#include "orthosat/layout.hpp"
#include "orthosat/metrics.hpp"
#include "orthosat/pipeline.hpp"

namespace orthosat {

// Edge list: a header line `n m`, then m lines `tail head` with 0-based
// vertex ids. Blank lines and text after '#' are ignored.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph &g);

// GML subset: `graph [ node [ id .. ] edge [ source .. target .. ] ]`.
// Node ids may be any integers; vertices are numbered in order of
// appearance. Unknown keys are skipped.
Graph parse_gml(std::string_view text);
std::string to_gml(const Graph &g);

// GML when the first token is `graph` (after optional top-level keys such
// as `Creator`), edge list otherwise.
Graph parse_graph(std::string_view text);

// Node coordinates come from `graphics [ x .. y .. ]`, bends from the
// `point [ x .. y .. ]` entries of an edge's `graphics [ Line [ .. ] ]`;
// the first and last point are dropped when they sit on the end nodes.
RawDrawing parse_gml_drawing(std::string_view text);

std::string read_file(const std::string &path);
void write_file(const std::string &path, std::string_view contents);

std::string drawing_json(const Drawing &d);
std::string metrics_json(const MetricsReport &m);
std::string run_json(const RunReport &r);
std::string compare_json(const CompareReport &c);

std::string metrics_csv_header();
std::string metrics_csv_row(std::string_view instance, const MetricsReport &m);
// Reads the format written by the two functions above.
std::vector<NamedReport> parse_metrics_csv(std::string_view text);

} // namespace orthosat
