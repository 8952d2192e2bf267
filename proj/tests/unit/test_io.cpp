/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include <gtest/gtest.h>

#include <filesystem>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "orthosat/bench.hpp"
#include "orthosat/error.hpp"
#include "orthosat/generators.hpp"
#include "orthosat/io.hpp"
#include "orthosat/svg.hpp"

using namespace orthosat;
using nlohmann::json;

namespace {

ErrorCode code_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::Internal;
}

// Tags must nest and every attribute value must be quoted.
bool well_formed_xml(const std::string &text) {
  std::vector<std::string> open;
  std::size_t p = 0;
  while ((p = text.find('<', p)) != std::string::npos) {
    const std::size_t q = text.find('>', p);
    if (q == std::string::npos)
      return false;
    const std::string tag = text.substr(p + 1, q - p - 1);
    p = q + 1;
    if (tag.empty())
      return false;
    if (tag[0] == '?' || tag[0] == '!')
      continue;
    if (std::count(tag.begin(), tag.end(), '"') % 2 != 0)
      return false;
    if (tag[0] == '/') {
      if (open.empty() || open.back() != tag.substr(1))
        return false;
      open.pop_back();
    } else if (tag.back() != '/') {
      open.push_back(tag.substr(0, tag.find(' ')));
    }
  }
  return open.empty();
}

Drawing sample_drawing() {
  const RunReport r = run_sm(generate_random_deg4(14, 1.6, 4));
  return draw(r.expanded, r.orders);
}

} // namespace

TEST(Io, EdgeListRoundTrip) {
  const Graph g = generate_random_deg4(20, 1.5, 2);
  const std::string text = to_edge_list(g);
  const Graph h = parse_edge_list(text);
  EXPECT_EQ(h, g);
  EXPECT_EQ(to_edge_list(h), text);
  EXPECT_EQ(parse_graph(text), g);
}

TEST(Io, EdgeListCommentsAndBlankLines) {
  const Graph g = parse_edge_list("# square\n4 4\n0 1\n\n1 2 # side\n2 3\n3 0\n");
  EXPECT_EQ(g, cycle_graph(4));
}

TEST(Io, EdgeListErrorsNameTheLine) {
  try {
    (void)parse_edge_list("3 2\n0 1\n1 x\n");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_EQ(code_of([] { (void)parse_edge_list("3 2\n0 1\n"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { (void)parse_edge_list("2 1\n0 0\n"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { (void)parse_edge_list("2 2\n0 1\n1 0\n"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { (void)parse_edge_list("2 1\n0 5\n"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { (void)parse_edge_list(""); }), ErrorCode::Parse);
}

TEST(Io, GmlRoundTripAndDetection) {
  const Graph g = complete_graph(5);
  const std::string text = to_gml(g);
  EXPECT_EQ(parse_gml(text), g);
  EXPECT_EQ(parse_graph(text), g);
  const Graph h = parse_graph("Creator \"x\"\ngraph [\n node [ id 10 label \"a\" ]\n"
                              " node [ id 20 ]\n node [ id 30 ]\n"
                              " edge [ source 20 target 10 ]\n"
                              " edge [ source 30 target 20 ]\n]\n");
  ASSERT_EQ(h.vertex_count(), 3u);
  EXPECT_EQ(h.edge(eid(0)).tail, vid(1));
  EXPECT_EQ(h.edge(eid(0)).head, vid(0));
  EXPECT_EQ(code_of([] { (void)parse_gml("graph [ node [ id 1 ] edge [ source 1 target 2 ] ]"); }),
            ErrorCode::Parse);
  EXPECT_EQ(code_of([] { (void)parse_gml("graph [ node [ id 1 ]"); }), ErrorCode::Parse);
}

TEST(Io, GmlDrawingCoordinatesAndBends) {
  const RawDrawing raw = parse_gml_drawing(
      "graph [\n"
      " node [ id 7 graphics [ x 10.5 y 20 ] ]\n"
      " node [ id 9 graphics [ x 40 y 60 ] ]\n"
      " edge [ source 7 target 9 graphics [ Line [ point [ x 10.5 y 20 ]\n"
      "   point [ x 10.5 y 60 ] point [ x 40 y 60 ] ] ] ]\n"
      "]\n");
  EXPECT_EQ(raw.ids, (std::vector<std::int64_t>{7, 9}));
  EXPECT_DOUBLE_EQ(raw.x[0], 10.5);
  EXPECT_DOUBLE_EQ(raw.y[1], 60.0);
  ASSERT_EQ(raw.edges.size(), 1u);
  EXPECT_EQ(raw.edges[0].source, 0u);
  EXPECT_EQ(raw.edges[0].target, 1u);
  ASSERT_EQ(raw.edges[0].bends.size(), 1u);
  EXPECT_DOUBLE_EQ(raw.edges[0].bends[0][1], 60.0);
}

TEST(Io, DrawingJsonMirrorsTheDrawing) {
  const Drawing d = sample_drawing();
  const json j = json::parse(drawing_json(d));
  ASSERT_EQ(j["points"].size(), d.points.size());
  ASSERT_EQ(j["edges"].size(), d.routes.size());
  EXPECT_EQ(j["segments"].size(), d.segments.size());
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    EXPECT_EQ(j["points"][i]["x"].get<std::int64_t>(), d.points[i].at.x);
    EXPECT_EQ(j["points"][i]["y"].get<std::int64_t>(), d.points[i].at.y);
  }
  for (std::size_t r = 0; r < d.routes.size(); ++r) {
    const auto line = d.polyline(d.routes[r]);
    ASSERT_EQ(j["edges"][r]["polyline"].size(), line.size());
    for (std::size_t k = 0; k < line.size(); ++k) {
      EXPECT_EQ(j["edges"][r]["polyline"][k][0].get<std::int64_t>(), line[k].x);
      EXPECT_EQ(j["edges"][r]["polyline"][k][1].get<std::int64_t>(), line[k].y);
    }
  }
}

TEST(Io, MetricsAndRunJson) {
  const Graph g = cycle_graph(4);
  const RunReport r = run_sm(g);
  const json run = json::parse(run_json(r));
  EXPECT_EQ(run["shape"].get<std::string>().size(), 4u);
  EXPECT_EQ(run["sat_invocations"].get<int>(), 1);
  EXPECT_EQ(run["formula_sizes"][0]["clauses"].get<int>(), 48);

  MetricsReport m;
  m.bends = 3;
  m.area = 12;
  m.bends_deviation = 0.25;
  const json mj = json::parse(metrics_json(m));
  EXPECT_EQ(mj["bends"].get<int>(), 3);
  EXPECT_EQ(mj["area"].get<int>(), 12);
  EXPECT_DOUBLE_EQ(mj["bends_deviation"].get<double>(), 0.25);
}

TEST(Io, MetricsCsvRoundTrip) {
  MetricsReport a;
  a.bends = 7;
  a.crossings = 2;
  a.bends_deviation = 1.0 / 3.0;
  a.max_bends = 3;
  a.area = 99;
  a.total_edge_length = 40;
  a.max_edge_length = 9;
  a.edge_length_deviation = 2.0 / 7.0;
  a.time_seconds = 0.125;
  MetricsReport b;
  b.bends = 1;
  const std::string text =
      metrics_csv_header() + metrics_csv_row("x1", a) + metrics_csv_row("x2", b);
  const auto rows = parse_metrics_csv(text);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].instance, "x1");
  EXPECT_EQ(rows[0].metrics, a);
  EXPECT_EQ(rows[1].metrics, b);
  EXPECT_EQ(code_of([] { (void)metrics_csv_row("a,b", MetricsReport{}); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { (void)parse_metrics_csv("instance,bends\nx,1\n"); }),
            ErrorCode::Parse);
}

TEST(Io, SvgIsWellFormedAndTracesEveryRoute) {
  const Drawing d = sample_drawing();
  SvgOptions opt;
  opt.stub_offset = 0.0;
  const std::string svg = to_svg(d, opt);
  EXPECT_TRUE(well_formed_xml(svg));

  std::int64_t ymax = 0;
  for (const auto &p : d.points)
    ymax = std::max(ymax, p.at.y);
  const std::regex poly("data-edge=\"(\\d+)\" points=\"([^\"]*)\"");
  std::size_t seen = 0;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), poly);
       it != std::sregex_iterator(); ++it, ++seen) {
    const std::size_t r = seen;
    ASSERT_LT(r, d.routes.size());
    EXPECT_EQ(std::stoul((*it)[1]), idx(d.routes[r].edge));
    const auto line = d.polyline(d.routes[r]);
    std::istringstream in((*it)[2]);
    std::string pair;
    std::size_t k = 0;
    while (in >> pair) {
      const auto comma = pair.find(',');
      const double px = std::stod(pair.substr(0, comma));
      const double py = std::stod(pair.substr(comma + 1));
      ASSERT_LT(k, line.size());
      EXPECT_DOUBLE_EQ((px - opt.margin) / opt.unit, static_cast<double>(line[k].x));
      EXPECT_DOUBLE_EQ(static_cast<double>(ymax) - (py - opt.margin) / opt.unit,
                       static_cast<double>(line[k].y));
      ++k;
    }
    EXPECT_EQ(k, line.size());
  }
  EXPECT_EQ(seen, d.routes.size());
}

TEST(Io, SvgOffsetSeparatesSharedBoxSides) {
  const RunReport r = run_sm(star_graph(8));
  const Drawing d = draw(r.expanded, r.orders);
  SvgOptions plain;
  plain.stub_offset = 0.0;
  const std::string a = to_svg(d, plain);
  const std::string b = to_svg(d);
  EXPECT_TRUE(well_formed_xml(b));
  EXPECT_NE(a, b);
}

TEST(Io, PlotsAreWellFormed) {
  EXPECT_TRUE(well_formed_xml(svg_cdf("t", "x", {3, 1, 2, 2})));
  EXPECT_TRUE(well_formed_xml(svg_cdf("empty", "x", {})));
  EXPECT_TRUE(well_formed_xml(
      svg_scatter("s", "a", "b", {PlotSeries{"p", {1, 2}, {2, 1}}}, true)));
}

TEST(Io, FilesReportIoErrors) {
  EXPECT_EQ(code_of([] { (void)read_file("/nonexistent/dir/file"); }), ErrorCode::Io);
  EXPECT_EQ(code_of([] { write_file("/nonexistent/dir/file", "x"); }), ErrorCode::Io);
  const auto path = std::filesystem::temp_directory_path() / "orthosat_io_test.txt";
  write_file(path.string(), "abc\n");
  EXPECT_EQ(read_file(path.string()), "abc\n");
  std::filesystem::remove(path);
}

TEST(Bench, GridArithmetic) {
  EXPECT_DOUBLE_EQ(grid_density(0), 1.25);
  EXPECT_DOUBLE_EQ(grid_density(100), 1.75);
  EXPECT_EQ(grid_edge_count(20, 0), 25u);
  EXPECT_EQ(grid_edge_count(60, 100), 105u);
  EXPECT_EQ(grid_edge_count(21, 3), 26u);
  EXPECT_NE(instance_seed(1, 20, 1, 0), instance_seed(1, 20, 2, 0));
  EXPECT_EQ(instance_seed(1, 20, 1, 0), instance_seed(1, 20, 1, 0));
}

TEST(Bench, SmallGridRowsAndOutputs) {
  BenchConfig cfg;
  cfg.ns = {20, 21, 22};
  cfg.grid = {0, 25, 50, 75, 100};
  cfg.seed = 1;
  cfg.record_time = false;
  const auto rows = run_bench(cfg);
  ASSERT_EQ(rows.size(), 15u);
  EXPECT_EQ(rows[0].instance, "n20_i0_r0");
  EXPECT_EQ(rows[14].instance, "n22_i100_r0");
  for (const auto &r : rows) {
    EXPECT_TRUE(r.ok) << r.instance << ": " << r.error;
    EXPECT_EQ(r.seconds, 0.0);
  }
  const std::string internals = internals_csv(rows);
  EXPECT_EQ(internals.substr(0, internals.find('\n')),
            "instance,n,i,edges,seed,ok,cycles_added,dummies,dummies_as_bends,"
            "sat_invocations,seconds");
  EXPECT_EQ(std::count(internals.begin(), internals.end(), '\n'), 16);

  cfg.jobs = 3;
  const auto threaded = run_bench(cfg);
  EXPECT_EQ(internals_csv(threaded), internals);
  EXPECT_EQ(bench_metrics_csv(threaded), bench_metrics_csv(rows));
  EXPECT_EQ(formula_csv(threaded), formula_csv(rows));
}
