/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "orthosat/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "orthosat/error.hpp"

namespace orthosat {

namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok)
    out.push_back(tok);
  return out;
}

template <class T> bool parse_number(std::string_view s, T &out) {
  const auto *end = s.data() + s.size();
  const auto r = std::from_chars(s.data(), end, out);
  return r.ec == std::errc{} && r.ptr == end;
}

// Double parsing without std::from_chars(double), which this toolchain
// lacks.
bool parse_real(const std::string &s, double &out) {
  if (s.empty())
    return false;
  std::istringstream in(s);
  in.imbue(std::locale::classic());
  in >> out;
  return !in.fail() && in.peek() == std::char_traits<char>::eof() &&
         std::isfinite(out);
}

void add_parsed_edge(Graph &g, std::size_t a, std::size_t b,
                     const std::string &where) {
  if (a >= g.vertex_count() || b >= g.vertex_count())
    fail(ErrorCode::Parse, where + ": vertex out of range");
  try {
    g.add_edge(vid(a), vid(b));
  } catch (const Error &e) {
    fail(ErrorCode::Parse, where + ": " + e.what());
  }
}

// --- GML --------------------------------------------------------------

struct GmlValue;
using GmlList = std::vector<std::pair<std::string, GmlValue>>;

struct GmlValue {
  enum class Kind { Number, String, List } kind = Kind::Number;
  double number = 0.0;
  std::string text; // raw token for numbers, contents for strings
  std::shared_ptr<GmlList> list;
};

class GmlParser {
public:
  explicit GmlParser(std::string_view src) : src_(src) {}

  GmlList parse_top() {
    GmlList out = parse_list(false);
    skip_space();
    if (pos_ != src_.size())
      error("unexpected ']'");
    return out;
  }

private:
  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;

  [[noreturn]] void error(const std::string &what) const {
    fail(ErrorCode::Parse, "GML line " + std::to_string(line_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n')
          ++pos_;
      } else {
        break;
      }
    }
  }

  std::string word() {
    const std::size_t b = pos_;
    while (pos_ < src_.size() &&
           !std::isspace(static_cast<unsigned char>(src_[pos_])) &&
           src_[pos_] != '[' && src_[pos_] != ']' && src_[pos_] != '"')
      ++pos_;
    return std::string(src_.substr(b, pos_ - b));
  }

  GmlValue value() {
    skip_space();
    if (pos_ >= src_.size())
      error("missing value");
    GmlValue v;
    const char c = src_[pos_];
    if (c == '[') {
      ++pos_;
      v.kind = GmlValue::Kind::List;
      v.list = std::make_shared<GmlList>(parse_list(true));
      return v;
    }
    if (c == '"') {
      ++pos_;
      const std::size_t b = pos_;
      while (pos_ < src_.size() && src_[pos_] != '"') {
        if (src_[pos_] == '\n')
          ++line_;
        ++pos_;
      }
      if (pos_ >= src_.size())
        error("unterminated string");
      v.kind = GmlValue::Kind::String;
      v.text = std::string(src_.substr(b, pos_ - b));
      ++pos_;
      return v;
    }
    v.text = word();
    if (!parse_real(v.text, v.number))
      error("bad number '" + v.text + "'");
    return v;
  }

  GmlList parse_list(bool nested) {
    GmlList out;
    for (;;) {
      skip_space();
      if (pos_ >= src_.size()) {
        if (nested)
          error("missing ']'");
        return out;
      }
      if (src_[pos_] == ']') {
        if (!nested)
          return out;
        ++pos_;
        return out;
      }
      std::string key = word();
      if (key.empty())
        error("expected a key");
      out.emplace_back(std::move(key), value());
    }
  }
};

const GmlValue *find_key(const GmlList &l, std::string_view key) {
  for (const auto &[k, v] : l)
    if (k == key)
      return &v;
  return nullptr;
}

const GmlList &graph_block(const GmlList &top) {
  const GmlValue *g = find_key(top, "graph");
  if (!g || g->kind != GmlValue::Kind::List)
    fail(ErrorCode::Parse, "GML: no graph block");
  return *g->list;
}

std::int64_t integer_field(const GmlList &l, std::string_view key,
                           std::string_view block) {
  const GmlValue *v = find_key(l, key);
  if (!v || v->kind != GmlValue::Kind::Number)
    fail(ErrorCode::Parse, "GML: " + std::string(block) + " without " +
                               std::string(key));
  std::int64_t out = 0;
  if (!parse_number(v->text, out))
    fail(ErrorCode::Parse, "GML: " + std::string(block) + " " +
                               std::string(key) + " is not an integer");
  return out;
}

struct GmlGraph {
  std::vector<std::int64_t> ids;
  std::map<std::int64_t, std::size_t> index;
  std::vector<const GmlList *> nodes;
  std::vector<const GmlList *> edges;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
};

GmlGraph read_gml(const GmlList &graph) {
  GmlGraph out;
  for (const auto &[key, v] : graph) {
    if (v.kind != GmlValue::Kind::List)
      continue;
    if (key == "node") {
      const auto id = integer_field(*v.list, "id", "node");
      if (!out.index.emplace(id, out.ids.size()).second)
        fail(ErrorCode::Parse,
             "GML: duplicate node id " + std::to_string(id));
      out.ids.push_back(id);
      out.nodes.push_back(v.list.get());
    }
  }
  for (const auto &[key, v] : graph) {
    if (v.kind != GmlValue::Kind::List || key != "edge")
      continue;
    const auto s = integer_field(*v.list, "source", "edge");
    const auto t = integer_field(*v.list, "target", "edge");
    const auto si = out.index.find(s), ti = out.index.find(t);
    if (si == out.index.end() || ti == out.index.end())
      fail(ErrorCode::Parse, "GML: edge " + std::to_string(s) + " -- " +
                                 std::to_string(t) + " names an unknown node");
    out.edges.push_back(v.list.get());
    out.ends.emplace_back(si->second, ti->second);
  }
  return out;
}

bool coordinate_pair(const GmlList &l, double &x, double &y) {
  const GmlValue *vx = find_key(l, "x");
  const GmlValue *vy = find_key(l, "y");
  if (!vx || !vy || vx->kind != GmlValue::Kind::Number ||
      vy->kind != GmlValue::Kind::Number)
    return false;
  x = vx->number;
  y = vy->number;
  return true;
}

const GmlList *sublist(const GmlList &l, std::string_view key) {
  const GmlValue *v = find_key(l, key);
  return v && v->kind == GmlValue::Kind::List ? v->list.get() : nullptr;
}

std::string format_real(double v) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << std::setprecision(17) << v;
  return out.str();
}

json metrics_object(const MetricsReport &m) {
  const auto values = metric_values(m);
  json out = json::object();
  for (std::size_t k = 0; k < kMetricNames.size(); ++k) {
    const std::string key(kMetricNames[k]);
    if (k == 2 || k == 7 || k == 8)
      out[key] = values[k];
    else
      out[key] = static_cast<std::int64_t>(values[k]);
  }
  return out;
}

const char *kind_name(PointKind k) {
  switch (k) {
  case PointKind::Vertex:
    return "vertex";
  case PointKind::Dummy:
    return "dummy";
  case PointKind::Port:
    return "port";
  }
  return "vertex";
}

json drawing_object(const Drawing &d) {
  json pts = json::array();
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    const auto &p = d.points[i];
    json o{{"id", i},
           {"x", p.at.x},
           {"y", p.at.y},
           {"kind", kind_name(p.kind)},
           {"vertex", idx(p.vertex)}};
    if (p.kind == PointKind::Dummy)
      o["bend"] = p.bend;
    pts.push_back(std::move(o));
  }
  json edges = json::array();
  for (const auto &r : d.routes) {
    json line = json::array();
    for (const auto &p : d.polyline(r))
      line.push_back({p.x, p.y});
    edges.push_back({{"edge", idx(r.edge)},
                     {"points", r.points},
                     {"polyline", std::move(line)}});
  }
  json segs = json::array();
  for (const auto &s : d.segments)
    segs.push_back({{"from", s.from},
                    {"to", s.to},
                    {"label", std::string(1, to_char(s.label))}});
  return {{"points", std::move(pts)},
          {"edges", std::move(edges)},
          {"segments", std::move(segs)}};
}

} // namespace

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool header = false;
  std::size_t expected = 0, seen = 0;
  Graph g;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const auto toks = split_ws(line);
    if (toks.empty())
      continue;
    const std::string where = "line " + std::to_string(line_no);
    if (toks.size() != 2)
      fail(ErrorCode::Parse, where + ": expected two integers");
    std::size_t a = 0, b = 0;
    if (!parse_number(toks[0], a) || !parse_number(toks[1], b))
      fail(ErrorCode::Parse, where + ": expected two non-negative integers");
    if (!header) {
      g = Graph(a);
      expected = b;
      header = true;
      continue;
    }
    if (seen == expected)
      fail(ErrorCode::Parse, where + ": more edges than the header announces");
    add_parsed_edge(g, a, b, where);
    ++seen;
  }
  if (!header)
    fail(ErrorCode::Parse, "empty graph file");
  if (seen != expected)
    fail(ErrorCode::Parse, "header announces " + std::to_string(expected) +
                               " edges, file has " + std::to_string(seen));
  return g;
}

std::string to_edge_list(const Graph &g) {
  std::string out =
      std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) +
      "\n";
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto &ed = g.edge(eid(e));
    out += std::to_string(idx(ed.tail)) + " " + std::to_string(idx(ed.head)) +
           "\n";
  }
  return out;
}

Graph parse_gml(std::string_view text) {
  const GmlList top = GmlParser(text).parse_top();
  const GmlGraph gg = read_gml(graph_block(top));
  Graph g(gg.ids.size());
  for (std::size_t k = 0; k < gg.ends.size(); ++k)
    add_parsed_edge(g, gg.ends[k].first, gg.ends[k].second,
                    "GML edge " + std::to_string(k));
  return g;
}

std::string to_gml(const Graph &g) {
  std::string out = "graph [\n  directed 0\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    out += "  node [ id " + std::to_string(v) + " ]\n";
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto &ed = g.edge(eid(e));
    out += "  edge [ source " + std::to_string(idx(ed.tail)) + " target " +
           std::to_string(idx(ed.head)) + " ]\n";
  }
  out += "]\n";
  return out;
}

Graph parse_graph(std::string_view text) {
  std::size_t p = 0;
  while (p < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[p]))) {
      ++p;
    } else if (text[p] == '#') {
      while (p < text.size() && text[p] != '\n')
        ++p;
    } else {
      break;
    }
  }
  if (p < text.size() && std::isalpha(static_cast<unsigned char>(text[p])))
    return parse_gml(text);
  return parse_edge_list(text);
}

RawDrawing parse_gml_drawing(std::string_view text) {
  const GmlList top = GmlParser(text).parse_top();
  const GmlGraph gg = read_gml(graph_block(top));
  RawDrawing raw;
  raw.ids = gg.ids;
  for (std::size_t k = 0; k < gg.nodes.size(); ++k) {
    const GmlList *gfx = sublist(*gg.nodes[k], "graphics");
    double x = 0, y = 0;
    if (!gfx || !coordinate_pair(*gfx, x, y))
      fail(ErrorCode::Parse,
           "GML: node " + std::to_string(gg.ids[k]) + " has no coordinates");
    raw.x.push_back(x);
    raw.y.push_back(y);
  }
  for (std::size_t k = 0; k < gg.edges.size(); ++k) {
    RawEdge e{gg.ends[k].first, gg.ends[k].second, {}};
    if (const GmlList *gfx = sublist(*gg.edges[k], "graphics"))
      if (const GmlList *line = sublist(*gfx, "Line"))
        for (const auto &[key, v] : *line) {
          double x = 0, y = 0;
          if (key != "point" || v.kind != GmlValue::Kind::List ||
              !coordinate_pair(*v.list, x, y))
            continue;
          e.bends.push_back({x, y});
        }
    const auto at = [&](std::size_t node, const std::array<double, 2> &p) {
      return raw.x[node] == p[0] && raw.y[node] == p[1];
    };
    if (!e.bends.empty() && at(e.source, e.bends.front()))
      e.bends.erase(e.bends.begin());
    if (!e.bends.empty() && at(e.target, e.bends.back()))
      e.bends.pop_back();
    raw.edges.push_back(std::move(e));
  }
  return raw;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad())
    fail(ErrorCode::Io, "cannot read '" + path + "'");
  return buf.str();
}

void write_file(const std::string &path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    fail(ErrorCode::Io, "cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out)
    fail(ErrorCode::Io, "cannot write '" + path + "'");
}

std::string drawing_json(const Drawing &d) {
  return drawing_object(d).dump(2) + "\n";
}

std::string metrics_json(const MetricsReport &m) {
  return metrics_object(m).dump(2) + "\n";
}

std::string run_json(const RunReport &r) {
  json cycles = json::array();
  for (const auto &c : r.added_cycles) {
    json vs = json::array();
    for (auto v : c.vertices)
      vs.push_back(idx(v));
    cycles.push_back(std::move(vs));
  }
  std::string labels;
  for (std::size_t e = 0; e < r.graph.edge_count(); ++e)
    labels += to_char(r.shape.label(eid(e)));
  json sizes = json::array();
  for (const auto &f : r.formula_sizes)
    sizes.push_back({{"variables", f.variables}, {"clauses", f.clauses}});
  json out{{"vertices", r.graph.vertex_count()},
           {"edges", r.graph.edge_count()},
           {"shape", labels},
           {"cycles_added", r.counters.cycles_added},
           {"dummies_added", r.counters.dummies_added},
           {"sat_invocations", r.counters.sat_invocations},
           {"added_cycles", std::move(cycles)},
           {"formula_sizes", std::move(sizes)},
           {"log", r.log},
           {"shape_seconds", r.shape_seconds},
           {"drawing_seconds", r.drawing_seconds}};
  return out.dump(2) + "\n";
}

std::string compare_json(const CompareReport &c) {
  json metrics = json::array();
  for (const auto &m : c.metrics) {
    json pairs = json::array();
    for (std::size_t i = 0; i < m.pairs.size(); ++i)
      pairs.push_back({{"instance", c.instances[i]},
                       {"a", m.pairs[i][0]},
                       {"b", m.pairs[i][1]}});
    metrics.push_back(
        {{"metric", m.metric},
         {"b_wins_percent", m.b_wins},
         {"ties_percent", m.ties},
         {"a_wins_percent", m.a_wins},
         {"linear", {{"c0", m.fit.c0}, {"c1", m.fit.c1}, {"r2", m.fit.r2}}},
         {"quadratic",
          {{"q0", m.fit.q0},
           {"q1", m.fit.q1},
           {"q2", m.fit.q2},
           {"r2", m.fit.r2_quadratic}}},
         {"degenerate_fit", m.fit.degenerate},
         {"pairs", std::move(pairs)}});
  }
  return json{{"instances", c.instances.size()}, {"metrics", std::move(metrics)}}
             .dump(2) +
         "\n";
}

std::string metrics_csv_header() {
  std::string out = "instance";
  for (auto name : kMetricNames)
    out += "," + std::string(name);
  return out + "\n";
}

std::string metrics_csv_row(std::string_view instance, const MetricsReport &m) {
  if (instance.find_first_of(",\n\"") != std::string_view::npos)
    fail(ErrorCode::InvalidArgument,
         "instance name '" + std::string(instance) +
             "' cannot be written to CSV");
  std::string out(instance);
  out += "," + std::to_string(m.bends) + "," + std::to_string(m.crossings) +
         "," + format_real(m.bends_deviation) + "," +
         std::to_string(m.max_bends) + "," + std::to_string(m.area) + "," +
         std::to_string(m.total_edge_length) + "," +
         std::to_string(m.max_edge_length) + "," +
         format_real(m.edge_length_deviation) + "," +
         format_real(m.time_seconds);
  return out + "\n";
}

std::vector<NamedReport> parse_metrics_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::vector<NamedReport> out;
  std::map<std::string, std::size_t> column;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty())
      continue;
    std::vector<std::string> cells;
    std::istringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ','))
      cells.push_back(trim(cell));
    if (column.empty()) {
      for (std::size_t k = 0; k < cells.size(); ++k)
        column[cells[k]] = k;
      for (auto name : kMetricNames)
        if (!column.count(std::string(name)))
          fail(ErrorCode::Parse,
               "metrics CSV lacks column '" + std::string(name) + "'");
      if (!column.count("instance"))
        fail(ErrorCode::Parse, "metrics CSV lacks column 'instance'");
      continue;
    }
    if (cells.size() != column.size())
      fail(ErrorCode::Parse,
           "metrics CSV line " + std::to_string(line_no) + ": wrong width");
    NamedReport r;
    r.instance = cells[column["instance"]];
    std::array<double, 9> v{};
    for (std::size_t k = 0; k < kMetricNames.size(); ++k)
      if (!parse_real(cells[column[std::string(kMetricNames[k])]], v[k]) ||
          v[k] < 0)
        fail(ErrorCode::Parse, "metrics CSV line " + std::to_string(line_no) +
                                   ": bad " + std::string(kMetricNames[k]));
    r.metrics.bends = static_cast<std::size_t>(v[0]);
    r.metrics.crossings = static_cast<std::size_t>(v[1]);
    r.metrics.bends_deviation = v[2];
    r.metrics.max_bends = static_cast<std::size_t>(v[3]);
    r.metrics.area = static_cast<std::int64_t>(v[4]);
    r.metrics.total_edge_length = static_cast<std::int64_t>(v[5]);
    r.metrics.max_edge_length = static_cast<std::int64_t>(v[6]);
    r.metrics.edge_length_deviation = v[7];
    r.metrics.time_seconds = v[8];
    out.push_back(std::move(r));
  }
  if (column.empty())
    fail(ErrorCode::Parse, "metrics CSV is empty");
  return out;
}

} // namespace orthosat
