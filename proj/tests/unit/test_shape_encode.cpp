/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include <gtest/gtest.h>

#include <random>

#include "convert.hpp"
#include "oracles.hpp"
#include "orthosat/encode.hpp"
#include "orthosat/error.hpp"
#include "orthosat/generators.hpp"
#include "orthosat/sat.hpp"
#include "orthosat/shape.hpp"

using namespace orthosat;
using namespace testing_support;

namespace {

CycleSet all_cycles(const oracle::RawGraph &raw) {
  CycleSet cs;
  for (const auto &c : oracle::simple_cycles(raw))
    cs.push_back(to_cycle(c));
  return cs;
}

} // namespace

TEST(Shape, LabelsAndOpposites) {
  EXPECT_EQ(opposite(Direction::L), Direction::R);
  EXPECT_EQ(opposite(Direction::U), Direction::D);
  for (Direction d : kDirections) {
    EXPECT_EQ(opposite(opposite(d)), d);
    EXPECT_EQ(direction_from_char(to_char(d)), d);
  }
  EXPECT_FALSE(direction_from_char('x').has_value());
  EXPECT_TRUE(is_horizontal(Direction::L));
  EXPECT_FALSE(is_horizontal(Direction::D));
}

TEST(Shape, WalkingAgainstTheEdgeReadsTheOpposite) {
  Graph g(2);
  g.add_edge(vid(0), vid(1));
  Shape s(1, Direction::R);
  EXPECT_EQ(s.from(g, eid(0), vid(0)), Direction::R);
  EXPECT_EQ(s.from(g, eid(0), vid(1)), Direction::L);
  EXPECT_EQ(s.to_string(), "R");
}

TEST(Shape, ViolationsMatchTheOracleRule) {
  std::mt19937_64 rng(3);
  int valid = 0, invalid = 0;
  for (int t = 0; t < 400; ++t) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int m = n - 1 + static_cast<int>(rng() % 4);
    const auto raw = random_connected(rng, n, m, 7);
    if (raw.n == 0)
      continue;
    oracle::Labels lab(raw.edges.size());
    for (auto &d : lab)
      d = static_cast<int>(rng() % 4);
    const bool expect = oracle::valid_shape(raw, lab);
    const bool got = !shape_violation(to_graph(raw), to_shape(lab)).has_value();
    EXPECT_EQ(got, expect);
    (expect ? valid : invalid)++;
  }
  EXPECT_GT(valid, 20);
  EXPECT_GT(invalid, 20);
}

TEST(Shape, WrongSizeIsAViolation) {
  const Graph g = cycle_graph(4);
  EXPECT_TRUE(shape_violation(g, Shape(3, Direction::R)).has_value());
  EXPECT_THROW(validate_shape(g, Shape(3, Direction::R)), Error);
}

TEST(Shape, SubdivisionCopiesTheLabel) {
  const Graph g = cycle_graph(4);
  const Shape s({Direction::R, Direction::U, Direction::L, Direction::D});
  auto [h, step] = subdivide_edge(g, eid(2));
  const Shape t = subdivide_shape(s, step);
  ASSERT_EQ(t.size(), 5u);
  EXPECT_EQ(t.label(eid(2)), Direction::L);
  EXPECT_EQ(t.label(eid(4)), Direction::L);
  EXPECT_FALSE(shape_violation(h, t).has_value());
}

TEST(Encode, VariableNumbering) {
  EXPECT_EQ(label_variable(eid(0), Direction::L), 1);
  EXPECT_EQ(label_variable(eid(0), Direction::U), 4);
  EXPECT_EQ(label_variable(eid(2), Direction::R), 10);
  for (int v = 1; v <= 40; ++v) {
    auto [e, d] = variable_label(v);
    EXPECT_EQ(label_variable(e, d), v);
  }
  EXPECT_THROW((void)variable_label(0), Error);
}

TEST(Encode, TraversalLiteralFollowsOrientation) {
  Graph g(2);
  g.add_edge(vid(0), vid(1));
  EXPECT_EQ(traversal_literal(g, eid(0), vid(0), Direction::R), 2);
  EXPECT_EQ(traversal_literal(g, eid(0), vid(1), Direction::R), 1);
  EXPECT_EQ(traversal_literal(g, eid(0), vid(1), Direction::U), 3);
}

TEST(Encode, EdgeClausesAreExactlyOne) {
  const auto cl = edge_clauses(eid(0));
  CnfFormula f;
  f.num_vars = 4;
  for (const auto &c : cl)
    f.add(c);
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<std::uint8_t> vals(5, 0);
    for (int b = 0; b < 4; ++b)
      vals[static_cast<std::size_t>(b + 1)] = static_cast<std::uint8_t>((mask >> b) & 1);
    EXPECT_EQ(satisfies(vals, f), __builtin_popcount(static_cast<unsigned>(mask)) == 1);
  }
}

TEST(Encode, SquareAndSingleEdgeCounts) {
  const Graph c4 = cycle_graph(4);
  const auto f = encode(c4, cycle_basis(c4));
  EXPECT_EQ(f.cnf.num_vars, 16);
  EXPECT_EQ(f.counts.edge, 28u);
  EXPECT_EQ(f.counts.vertex, 16u);
  EXPECT_EQ(f.counts.cycle, 4u);
  EXPECT_EQ(f.cnf.clauses.size(), 48u);

  Graph k2(2);
  k2.add_edge(vid(0), vid(1));
  const auto f2 = encode(k2, {});
  EXPECT_EQ(f2.cnf.clauses.size(), 7u);
  EXPECT_EQ(f2.cnf.num_vars, 4);
}

TEST(Encode, CountsMatchClosedFormIncludingHighDegree) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const int m = n - 1 + static_cast<int>(rng() % (n + 1));
    const auto raw = random_connected(rng, n, m, 8);
    if (raw.n == 0)
      continue;
    const Graph g = to_graph(raw);
    const CycleSet cs = cycle_basis(g);
    const auto f = encode(g, cs);
    const auto want = oracle::expected_clauses(raw, cs.size());
    EXPECT_EQ(f.counts.edge, want.edge);
    EXPECT_EQ(f.counts.vertex, want.vertex);
    EXPECT_EQ(f.counts.cycle, want.cycle);
    EXPECT_EQ(f.cnf.clauses.size(), want.total());
    EXPECT_NO_THROW(check_well_formed(f.cnf));
  }
}

TEST(Encode, AddingCyclesOnlyAppendsClauses) {
  const Graph g = complete_graph(4);
  const CycleSet all = all_cycles(to_raw(g));
  const auto small = encode(g, CycleSet(all.begin(), all.begin() + 2));
  const auto big = encode(g, all);
  ASSERT_LT(small.cnf.clauses.size(), big.cnf.clauses.size());
  for (std::size_t k = 0; k < small.cnf.clauses.size(); ++k)
    EXPECT_EQ(small.cnf.clauses[k], big.cnf.clauses[k]);
}

TEST(Encode, SatisfiabilityMatchesBruteForce) {
  std::mt19937_64 rng(21);
  int sat = 0, unsat = 0;
  for (int t = 0; t < 120; ++t) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int m = std::min(n - 1 + static_cast<int>(rng() % 4), 7);
    if (m < n - 1)
      continue;
    const auto raw = random_connected(rng, n, m, 6);
    if (raw.n == 0)
      continue;
    auto cycles = oracle::simple_cycles(raw);
    // Use a random subset of the cycles half of the time.
    if (rng() & 1) {
      std::vector<std::vector<int>> keep;
      for (auto &c : cycles)
        if (rng() & 1)
          keep.push_back(c);
      cycles = keep;
    }
    CycleSet cs;
    for (const auto &c : cycles)
      cs.push_back(to_cycle(c));
    const Graph g = to_graph(raw);
    const auto f = encode(g, cs);
    const auto out = solve(f.cnf);
    const bool expect = oracle::exists_complete_shape(raw, cycles);
    EXPECT_EQ(out.is_sat(), expect);
    if (out.is_sat()) {
      ++sat;
      const auto lab = to_labels(decode_model(f, out.model()));
      EXPECT_TRUE(oracle::valid_shape(raw, lab));
      for (const auto &c : cycles)
        EXPECT_EQ(oracle::cycle_mask(raw, lab, c), 0xF);
    } else {
      ++unsat;
    }
  }
  EXPECT_GT(sat, 10);
  EXPECT_GT(unsat, 10);
}

TEST(Encode, SplitEdgeComesFromTheConflictingCycle) {
  // A triangle can never be complete; the pendant edge plays no part.
  Graph g(4);
  g.add_edge(vid(0), vid(1));
  g.add_edge(vid(1), vid(2));
  g.add_edge(vid(2), vid(0));
  g.add_edge(vid(2), vid(3));
  const auto f = encode(g, cycle_basis(g));
  const auto out = solve(f.cnf);
  ASSERT_FALSE(out.is_sat());
  const EdgeId e = select_split_edge(f, out.refutation());
  EXPECT_LT(idx(e), 3u);
}

TEST(Encode, SplitEdgeIsDeterministic) {
  const Graph g = complete_graph(4);
  const auto f = encode(g, all_cycles(to_raw(g)));
  const auto a = solve(f.cnf);
  const auto b = solve(f.cnf);
  ASSERT_FALSE(a.is_sat());
  EXPECT_EQ(select_split_edge(f, a.refutation()),
            select_split_edge(f, b.refutation()));
}

TEST(Encode, DimacsNamesEveryVariableAndRoundTrips) {
  const Graph g = cycle_graph(4);
  const auto f = encode(g, cycle_basis(g));
  const std::string text = to_dimacs(f);
  EXPECT_NE(text.find("c var 1 edge 0 label L"), std::string::npos);
  EXPECT_NE(text.find("c var 16 edge 3 label U"), std::string::npos);
  EXPECT_NE(text.find("p cnf 16 48"), std::string::npos);
  EXPECT_EQ(parse_dimacs(text), f.cnf);
}

TEST(Cnf, ParseErrors) {
  EXPECT_THROW((void)parse_dimacs("1 2 0\n"), Error);
  EXPECT_THROW((void)parse_dimacs("p cnf 2 1\n1 x 0\n"), Error);
  EXPECT_THROW((void)parse_dimacs("p cnf 2 2\n1 2 0\n"), Error);
  EXPECT_THROW((void)parse_dimacs("p cnf 2 1\n1 2\n"), Error);
  CnfFormula bad;
  bad.num_vars = 2;
  bad.add({1, 3});
  EXPECT_THROW(check_well_formed(bad), Error);
}
