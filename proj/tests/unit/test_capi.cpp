/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "orthosat/orthosat.h"

namespace fs = std::filesystem;

namespace {

std::string take(char *s) {
  std::string out = s ? s : "";
  osat_string_free(s);
  return out;
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path fresh_dir(const std::string &name) {
  const fs::path p = fs::temp_directory_path() / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

struct Graph {
  osat_graph *g = nullptr;
  ~Graph() { osat_graph_free(g); }
};

} // namespace

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STRNE(osat_version(), "");
  EXPECT_STREQ(osat_status_name(OSAT_OK), "ok");
  EXPECT_STREQ(osat_status_name(OSAT_E_PARSE), "parse error");
  EXPECT_STREQ(osat_status_name(OSAT_E_ITERATION_CAP), "iteration cap");
}

TEST(CApi, ParseInspectSerialize) {
  Graph g;
  ASSERT_EQ(osat_graph_parse("3 2\n0 1\n1 2\n", &g.g), OSAT_OK);
  EXPECT_EQ(osat_graph_vertex_count(g.g), 3u);
  EXPECT_EQ(osat_graph_edge_count(g.g), 2u);
  uint32_t t = 0, h = 0;
  ASSERT_EQ(osat_graph_edge(g.g, 1, &t, &h), OSAT_OK);
  EXPECT_EQ(t, 1u);
  EXPECT_EQ(h, 2u);
  EXPECT_EQ(osat_graph_edge(g.g, 2, &t, &h), OSAT_E_INVALID_ARGUMENT);
  char *text = nullptr;
  ASSERT_EQ(osat_graph_serialize(g.g, "text", &text), OSAT_OK);
  EXPECT_EQ(take(text), "3 2\n0 1\n1 2\n");
  char *gml = nullptr;
  ASSERT_EQ(osat_graph_serialize(g.g, "gml", &gml), OSAT_OK);
  Graph back;
  ASSERT_EQ(osat_graph_parse(take(gml).c_str(), &back.g), OSAT_OK);
  EXPECT_EQ(osat_graph_edge_count(back.g), 2u);
  EXPECT_EQ(osat_graph_serialize(g.g, "dot", &text), OSAT_E_INVALID_ARGUMENT);
}

TEST(CApi, ErrorsCarryMessages) {
  osat_graph *g = nullptr;
  EXPECT_EQ(osat_graph_parse("2 1\n0 9\n", &g), OSAT_E_PARSE);
  EXPECT_EQ(g, nullptr);
  EXPECT_STRNE(osat_last_error(), "");
  EXPECT_EQ(osat_graph_parse(nullptr, &g), OSAT_E_INVALID_ARGUMENT);
  EXPECT_EQ(osat_graph_fixture("nonsense", &g), OSAT_E_INVALID_ARGUMENT);
  EXPECT_EQ(osat_graph_read_file("/nonexistent/file", &g), OSAT_E_IO);
  EXPECT_EQ(osat_graph_generate(5, 2.5, 0, &g), OSAT_E_INVALID_ARGUMENT);
  EXPECT_EQ(osat_graph_generate(5, 0.2, 0, &g), OSAT_E_INFEASIBLE);
}

TEST(CApi, FixturesExist) {
  for (const char *name : {"c4", "k4", "aligned-conflict", "adversarial-1",
                           "cycle-6", "path-3", "complete-5", "star-6"}) {
    Graph g;
    EXPECT_EQ(osat_graph_fixture(name, &g.g), OSAT_OK) << name;
  }
  Graph adv;
  ASSERT_EQ(osat_graph_fixture("adversarial-2", &adv.g), OSAT_OK);
  EXPECT_EQ(osat_graph_vertex_count(adv.g), 42u);
}

TEST(CApi, DrawSquare) {
  Graph g;
  ASSERT_EQ(osat_graph_fixture("c4", &g.g), OSAT_OK);
  osat_options o;
  osat_options_init(&o);
  osat_result *r = nullptr;
  ASSERT_EQ(osat_draw(g.g, &o, &r), OSAT_OK);
  osat_counters c;
  ASSERT_EQ(osat_result_counters(r, &c), OSAT_OK);
  EXPECT_EQ(c.area, 4);
  EXPECT_EQ(c.bends, 0u);
  EXPECT_EQ(c.crossings, 0u);
  EXPECT_EQ(c.sat_invocations, 1u);
  for (osat_part p : {OSAT_PART_DRAWING_JSON, OSAT_PART_METRICS_JSON,
                      OSAT_PART_RUN_JSON, OSAT_PART_LOG,
                      OSAT_PART_METRICS_CSV}) {
    char *s = nullptr;
    ASSERT_EQ(osat_result_render(r, p, &s), OSAT_OK);
    EXPECT_FALSE(take(s).empty());
  }
  char *svg = nullptr;
  ASSERT_EQ(osat_result_render(r, OSAT_PART_SVG, &svg), OSAT_OK);
  const std::string text = take(svg);
  EXPECT_EQ(text.rfind("<?xml", 0), 0u);
  std::size_t lines = 0;
  for (auto at = text.find("<polyline"); at != std::string::npos;
       at = text.find("<polyline", at + 1))
    ++lines;
  EXPECT_EQ(lines, 4u);
  osat_result_free(r);
}

TEST(CApi, CapIsReported) {
  Graph g;
  ASSERT_EQ(osat_graph_fixture("k4", &g.g), OSAT_OK);
  osat_options o;
  osat_options_init(&o);
  o.max_subdivisions = 1;
  osat_result *r = nullptr;
  EXPECT_EQ(osat_draw(g.g, &o, &r), OSAT_E_ITERATION_CAP);
  EXPECT_EQ(r, nullptr);
  EXPECT_NE(std::string(osat_last_error()).find("cap"), std::string::npos);
}

TEST(CApi, Dimacs) {
  Graph g;
  ASSERT_EQ(osat_graph_fixture("c4", &g.g), OSAT_OK);
  char *text = nullptr;
  ASSERT_EQ(osat_encode_dimacs(g.g, &text), OSAT_OK);
  EXPECT_NE(take(text).find("p cnf 16 48"), std::string::npos);
}

TEST(CApi, BenchWithoutTimesIsByteIdentical) {
  osat_bench_options o;
  osat_bench_options_init(&o);
  o.n_min = 20;
  o.n_max = 22;
  o.i_min = 0;
  o.i_max = 100;
  o.i_step = 25;
  o.seed = 7;
  o.record_time = 0;
  const fs::path a = fresh_dir("orthosat_capi_bench_a");
  const fs::path b = fresh_dir("orthosat_capi_bench_b");
  std::size_t rows = 0;
  const auto count = [](const char *, int ok, double seconds, void *user) {
    EXPECT_EQ(ok, 1);
    EXPECT_EQ(seconds, 0.0);
    ++*static_cast<std::size_t *>(user);
  };
  size_t failed = 99;
  ASSERT_EQ(osat_bench_run(&o, a.c_str(), count, &rows, &failed), OSAT_OK);
  EXPECT_EQ(rows, 15u);
  EXPECT_EQ(failed, 0u);
  o.jobs = 2;
  ASSERT_EQ(osat_bench_run(&o, b.c_str(), nullptr, nullptr, nullptr), OSAT_OK);
  for (const char *f : {"metrics.csv", "internals.csv", "formula.csv",
                        "cdf_cycles_added.svg", "cdf_dummies.svg",
                        "cdf_dummies_as_bends.svg", "cdf_sat_invocations.svg",
                        "cdf_seconds.svg"}) {
    ASSERT_TRUE(fs::exists(a / f)) << f;
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
  }

  // Comparing a run with itself ties on every metric.
  const fs::path cmp = fresh_dir("orthosat_capi_compare");
  ASSERT_EQ(osat_compare_files((a / "metrics.csv").c_str(),
                               (b / "metrics.csv").c_str(), cmp.c_str()),
            OSAT_OK);
  const std::string json = slurp(cmp / "compare.json");
  EXPECT_NE(json.find("\"ties_percent\": 100.0"), std::string::npos);
  EXPECT_TRUE(fs::exists(cmp / "scatter_bends.svg"));
  EXPECT_EQ(osat_bench_run(&o, "/nonexistent/dir", nullptr, nullptr, nullptr),
            OSAT_E_IO);
}

TEST(CApi, ExternalMetrics) {
  const char *gml = "graph [\n"
                    " node [ id 1 graphics [ x 0 y 0 ] ]\n"
                    " node [ id 2 graphics [ x 30 y 0 ] ]\n"
                    " node [ id 3 graphics [ x 30 y 30 ] ]\n"
                    " edge [ source 1 target 2 ]\n"
                    " edge [ source 2 target 3 ]\n"
                    " edge [ source 1 target 3 graphics [ Line [\n"
                    "   point [ x 0 y 30 ] ] ] ]\n"
                    "]\n";
  char *out = nullptr;
  ASSERT_EQ(osat_metrics_external(gml, 8, 15, &out), OSAT_OK);
  const std::string j = take(out);
  EXPECT_NE(j.find("\"bends\": 1"), std::string::npos);
  EXPECT_NE(j.find("\"area\": 4"), std::string::npos);
  EXPECT_EQ(osat_metrics_external("graph [", 8, 15, &out), OSAT_E_PARSE);
}
