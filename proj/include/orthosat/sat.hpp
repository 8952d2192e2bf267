/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "orthosat/cnf.hpp"

namespace orthosat {

struct SolverConfig {
  // Only perturbs the initial variable activities; the same seed and the
  // same clause sequence always give the same answer.
  std::uint64_t seed = 0;
  std::uint32_t restart_unit = 100; // conflicts per Luby unit
  double var_decay = 0.95;
  double clause_decay = 0.999;
  double learnt_ratio = 1.0 / 3.0; // initial learned-clause limit per input clause
  bool deterministic = true;
};

struct Model {
  std::vector<std::uint8_t> values; // values[v] for v in 1..num_vars

  bool value(int var) const { return values.at(static_cast<std::size_t>(var)) != 0; }
};

struct Refutation {
  // Indices of the input clauses (in insertion order across all add_clause
  // calls) reachable from the final conflict, ascending.
  std::vector<std::size_t> core;
  // Learned clauses reachable from the final conflict, in the order they
  // were derived. Each is a unit-propagation consequence of the core input
  // clauses and the learned clauses before it.
  std::vector<Clause> learned;
  // participation[v]: occurrences of variable v over the core input clauses
  // and the reachable learned clauses. Index 0 is unused.
  std::vector<std::uint32_t> participation;
};

class SatOutcome {
public:
  explicit SatOutcome(Model m) : v_(std::move(m)) {}
  explicit SatOutcome(Refutation r) : v_(std::move(r)) {}

  bool is_sat() const noexcept { return std::holds_alternative<Model>(v_); }
  const Model &model() const { return std::get<Model>(v_); }
  const Refutation &refutation() const { return std::get<Refutation>(v_); }

private:
  std::variant<Model, Refutation> v_;
};

struct SolverStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t restarts = 0;
  std::uint64_t learned = 0;
  std::uint64_t solves = 0;
};

// Incremental CDCL solver. Clauses may be added between solve() calls; once
// a call answers UNSAT every later call returns the same refutation.
class Solver {
public:
  explicit Solver(int num_vars = 0, SolverConfig cfg = {});
  explicit Solver(const CnfFormula &f, SolverConfig cfg = {});
  ~Solver();
  Solver(Solver &&) noexcept;
  Solver &operator=(Solver &&) noexcept;
  Solver(const Solver &) = delete;
  Solver &operator=(const Solver &) = delete;

  int num_vars() const noexcept;
  std::size_t num_input_clauses() const noexcept;

  // Returns the index of the new input clause. Throws InvalidArgument for a
  // zero literal or a variable outside [1, num_vars].
  std::size_t add_clause(std::span<const int> literals);
  std::size_t add_clause(std::initializer_list<int> literals) {
    return add_clause(std::span<const int>(literals.begin(), literals.size()));
  }

  SatOutcome solve();
  const SolverStats &stats() const noexcept;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

SatOutcome solve(const CnfFormula &f, const SolverConfig &cfg = {});
SatOutcome solve_incremental(const CnfFormula &f,
                             std::span<const Clause> added,
                             const SolverConfig &cfg = {});

// Replays r against f: every learned clause must follow by unit propagation
// from the core input clauses and earlier learned clauses, and propagating
// all of them must end in a conflict. Input indices past f.clauses index
// into `added`.
bool verify_refutation(const CnfFormula &f, const Refutation &r,
                       std::span<const Clause> added = {});

} // namespace orthosat
