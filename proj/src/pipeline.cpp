/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "orthosat/pipeline.hpp"

#include <chrono>
#include <optional>

#include "orthosat/encode.hpp"
#include "orthosat/error.hpp"

namespace orthosat {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string state(const PipelineCounters &c) {
  return "dummies=" + std::to_string(c.dummies_added) +
         " cycles_added=" + std::to_string(c.cycles_added) +
         " sat_invocations=" + std::to_string(c.sat_invocations);
}

void accumulate(SolverStats &into, const SolverStats &s) {
  into.decisions += s.decisions;
  into.propagations += s.propagations;
  into.conflicts += s.conflicts;
  into.restarts += s.restarts;
  into.learned += s.learned;
  into.solves += s.solves;
}

} // namespace

RunReport run_sm(const Graph &input, const PipelineConfig &cfg) {
  if (!input.is_connected())
    fail(ErrorCode::InvalidArgument, "graph must be connected");
  const std::size_t m = input.edge_count();
  const std::size_t max_split =
      cfg.max_subdivisions ? cfg.max_subdivisions : 10 * m;
  const std::size_t max_added =
      cfg.max_cycle_additions ? cfg.max_cycle_additions : 50 * m;

  RunReport r;
  r.graph = input;
  r.subdivisions = SubdivisionRecord(input);
  r.cycles = cycle_basis(input);

  auto t = Clock::now();
  ShapeEncoding enc = encode(r.graph, r.cycles);
  std::optional<Solver> solver(std::in_place, enc.cnf, cfg.solver);
  r.shape_seconds += seconds_since(t);

  while (true) {
    t = Clock::now();
    ++r.counters.sat_invocations;
    r.formula_sizes.push_back(
        {static_cast<std::size_t>(enc.cnf.num_vars), enc.cnf.clauses.size()});
    const SatOutcome out = solver->solve();
    if (!out.is_sat()) {
      const EdgeId e = select_split_edge(enc, out.refutation());
      r.log.push_back("UNSAT split e=" + std::to_string(idx(e)));
      if (r.counters.dummies_added >= max_split)
        fail(ErrorCode::IterationCap,
             "subdivision cap of " + std::to_string(max_split) +
                 " reached: " + state(r.counters));
      auto [next, step] = subdivide_edge(r.graph, e);
      r.graph = std::move(next);
      r.subdivisions.apply(step);
      r.cycles = rewrite_cycles(r.cycles, step);
      ++r.counters.dummies_added;
      enc = encode(r.graph, r.cycles);
      accumulate(r.solver_stats, solver->stats());
      solver.emplace(enc.cnf, cfg.solver);
      r.shape_seconds += seconds_since(t);
      continue;
    }
    r.shape = decode_model(enc, out.model());
    r.log.push_back("SAT");
    r.shape_seconds += seconds_since(t);

    t = Clock::now();
    r.expanded = expand_high_degree(r.graph, r.shape);
    auto test = test_drawable(r.expanded.graph, r.expanded.shape);
    if (is_drawable(test)) {
      r.orders = std::move(std::get<TopologicalOrders>(test));
      accumulate(r.solver_stats, solver->stats());
      r.drawing_seconds += seconds_since(t);
      return r;
    }
    Cycle c = extract_incomplete_cycle(r.expanded.graph, r.expanded.shape,
                                       std::get<WitnessCycle>(test));
    if (!r.expanded.plan.empty())
      c = contract_cycle(r.expanded, c);
    if (is_cycle_complete(r.graph, r.shape, c).complete())
      fail(ErrorCode::Internal, "extracted cycle is complete");
    r.drawing_seconds += seconds_since(t);

    t = Clock::now();
    if (r.counters.cycles_added >= max_added)
      fail(ErrorCode::IterationCap,
           "cycle-addition cap of " + std::to_string(max_added) +
               " reached: " + state(r.counters));
    for (auto &cl : cycle_clauses(r.graph, c)) {
      solver->add_clause(cl);
      enc.cnf.add(std::move(cl));
      ++enc.counts.cycle;
    }
    r.log.push_back("ADD_CYCLE len=" + std::to_string(c.size()));
    r.cycles.push_back(c);
    r.added_cycles.push_back(std::move(c));
    ++r.counters.cycles_added;
    r.shape_seconds += seconds_since(t);
  }
}

} // namespace orthosat
