/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include <gtest/gtest.h>

#include <random>

#include "orthosat/error.hpp"
#include "orthosat/sat.hpp"

using namespace orthosat;

namespace {

bool brute_sat(const CnfFormula &f) {
  std::vector<std::uint8_t> vals(static_cast<std::size_t>(f.num_vars) + 1, 0);
  for (std::uint64_t a = 0; a < (1ULL << f.num_vars); ++a) {
    for (int v = 1; v <= f.num_vars; ++v)
      vals[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>((a >> (v - 1)) & 1);
    if (satisfies(vals, f))
      return true;
  }
  return false;
}

CnfFormula random_kcnf(std::mt19937_64 &rng, int vars, int clauses, int k) {
  CnfFormula f;
  f.num_vars = vars;
  for (int c = 0; c < clauses; ++c) {
    Clause cl;
    const int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(k));
    for (int l = 0; l < len; ++l) {
      const int v = 1 + static_cast<int>(rng() % static_cast<unsigned>(vars));
      cl.push_back((rng() & 1) ? v : -v);
    }
    f.add(cl);
  }
  return f;
}

// n + 1 pigeons in n holes.
CnfFormula pigeonhole(int n) {
  CnfFormula f;
  const auto var = [n](int p, int h) { return p * n + h + 1; };
  f.num_vars = (n + 1) * n;
  for (int p = 0; p <= n; ++p) {
    Clause c;
    for (int h = 0; h < n; ++h)
      c.push_back(var(p, h));
    f.add(c);
  }
  for (int h = 0; h < n; ++h)
    for (int p = 0; p <= n; ++p)
      for (int q = p + 1; q <= n; ++q)
        f.add({-var(p, h), -var(q, h)});
  return f;
}

} // namespace

TEST(Sat, EmptyFormulaIsSatisfiable) {
  CnfFormula f;
  f.num_vars = 3;
  const auto out = solve(f);
  ASSERT_TRUE(out.is_sat());
  EXPECT_EQ(out.model().values.size(), 4u);
}

TEST(Sat, ContradictoryUnitsGiveATwoClauseCore) {
  CnfFormula f;
  f.num_vars = 1;
  f.add({1});
  f.add({-1});
  const auto out = solve(f);
  ASSERT_FALSE(out.is_sat());
  EXPECT_EQ(out.refutation().core, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(verify_refutation(f, out.refutation()));
}

TEST(Sat, EmptyClauseIsUnsatisfiable) {
  CnfFormula f;
  f.num_vars = 2;
  f.add({1, 2});
  f.add({});
  const auto out = solve(f);
  ASSERT_FALSE(out.is_sat());
  EXPECT_EQ(out.refutation().core, (std::vector<std::size_t>{1}));
}

TEST(Sat, TautologiesAndDuplicateLiterals) {
  CnfFormula f;
  f.num_vars = 2;
  f.add({1, -1});
  f.add({2, 2, 2});
  f.add({-2, -2});
  EXPECT_FALSE(solve(f).is_sat());
  CnfFormula g;
  g.num_vars = 2;
  g.add({1, -1, 2});
  g.add({-2, -2});
  const auto out = solve(g);
  ASSERT_TRUE(out.is_sat());
  EXPECT_FALSE(out.model().value(2));
}

TEST(Sat, AgreesWithBruteForceAndJustifiesAnswers) {
  std::mt19937_64 rng(2024);
  int sat = 0, unsat = 0;
  for (int t = 0; t < 400; ++t) {
    const int vars = 3 + static_cast<int>(rng() % 18);
    const int clauses = static_cast<int>(vars * (2 + rng() % 4));
    const CnfFormula f = random_kcnf(rng, vars, clauses, 4);
    const auto out = solve(f);
    ASSERT_EQ(out.is_sat(), brute_sat(f)) << "instance " << t;
    if (out.is_sat()) {
      ++sat;
      EXPECT_TRUE(satisfies(out.model().values, f));
    } else {
      ++unsat;
      const auto &r = out.refutation();
      EXPECT_TRUE(verify_refutation(f, r));
      CnfFormula core;
      core.num_vars = f.num_vars;
      for (auto k : r.core)
        core.add(f.clauses[k]);
      EXPECT_FALSE(brute_sat(core));
      ASSERT_EQ(r.participation.size(), static_cast<std::size_t>(vars) + 1);
    }
  }
  EXPECT_GT(sat, 50);
  EXPECT_GT(unsat, 50);
}

TEST(Sat, ParticipationCountsCoreOccurrences) {
  CnfFormula f;
  f.num_vars = 3;
  f.add({1, 2});
  f.add({1, -2});
  f.add({-1, 2});
  f.add({-1, -2});
  f.add({3});
  const auto out = solve(f);
  ASSERT_FALSE(out.is_sat());
  const auto &r = out.refutation();
  for (auto k : r.core)
    EXPECT_LT(k, 4u);
  EXPECT_EQ(r.participation[3], 0u);
  EXPECT_GE(r.participation[1], 2u);
}

TEST(Sat, PigeonholeIsRefutedWithAVerifiableProof) {
  const CnfFormula f = pigeonhole(6);
  const auto out = solve(f);
  ASSERT_FALSE(out.is_sat());
  EXPECT_TRUE(verify_refutation(f, out.refutation()));
}

TEST(Sat, TamperedRefutationFailsVerification) {
  const CnfFormula f = pigeonhole(4);
  const auto out = solve(f);
  ASSERT_FALSE(out.is_sat());
  Refutation r = out.refutation();
  r.core.resize(r.core.size() / 2);
  EXPECT_FALSE(verify_refutation(f, r));
}

TEST(Sat, SameInputSameAnswer) {
  std::mt19937_64 rng(99);
  const CnfFormula f = random_kcnf(rng, 60, 250, 3);
  const auto first = solve(f);
  for (int k = 0; k < 5; ++k) {
    const auto again = solve(f);
    ASSERT_EQ(again.is_sat(), first.is_sat());
    if (first.is_sat())
      EXPECT_EQ(again.model().values, first.model().values);
    else
      EXPECT_EQ(again.refutation().core, first.refutation().core);
  }
}

TEST(Sat, IncrementalMatchesFromScratch) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    const int vars = 4 + static_cast<int>(rng() % 12);
    const CnfFormula base = random_kcnf(rng, vars, vars * 2, 3);
    const CnfFormula more = random_kcnf(rng, vars, vars * 2, 3);
    Solver s(base);
    const auto first = s.solve();
    EXPECT_EQ(first.is_sat(), brute_sat(base));
    for (const auto &c : more.clauses)
      s.add_clause(c);
    const auto second = s.solve();
    CnfFormula all = base;
    for (const auto &c : more.clauses)
      all.add(c);
    ASSERT_EQ(second.is_sat(), brute_sat(all));
    if (second.is_sat())
      EXPECT_TRUE(satisfies(second.model().values, all));
    else
      EXPECT_TRUE(verify_refutation(base, second.refutation(), more.clauses));
    const auto via = solve_incremental(base, more.clauses);
    EXPECT_EQ(via.is_sat(), second.is_sat());
    EXPECT_EQ(s.num_input_clauses(), all.clauses.size());
    if (!first.is_sat())
      EXPECT_EQ(second.refutation().core, first.refutation().core);
  }
}

TEST(Sat, StatsAccumulate) {
  const CnfFormula f = pigeonhole(5);
  Solver s(f);
  (void)s.solve();
  EXPECT_EQ(s.stats().solves, 1u);
  EXPECT_GT(s.stats().conflicts, 0u);
  EXPECT_GT(s.stats().propagations, 0u);
}

TEST(Sat, RejectsBadLiterals) {
  Solver s(3);
  EXPECT_THROW(s.add_clause({0}), Error);
  EXPECT_THROW(s.add_clause({4}), Error);
  EXPECT_THROW(s.add_clause({-4}), Error);
  EXPECT_EQ(s.num_input_clauses(), 0u);
}
