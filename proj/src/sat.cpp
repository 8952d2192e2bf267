/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "orthosat/sat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>

#include "orthosat/error.hpp"
#include "orthosat/random.hpp"

namespace orthosat {

namespace {

using Lit = std::uint32_t;
using CRef = std::uint32_t;
constexpr CRef kNoRef = UINT32_MAX;

constexpr std::uint8_t kFalse = 0, kTrue = 1, kUndef = 2;

Lit to_lit(int dimacs) {
  const auto v = static_cast<Lit>(std::abs(dimacs) - 1);
  return 2 * v + (dimacs < 0 ? 1u : 0u);
}
int to_dimacs(Lit l) {
  const int v = static_cast<int>(l >> 1) + 1;
  return (l & 1u) ? -v : v;
}
constexpr std::uint32_t var_of(Lit l) { return l >> 1; }

// Luby sequence value for index x (1, 1, 2, 1, 1, 2, 4, ...).
double luby(double y, std::uint64_t x) {
  std::uint64_t size = 1, seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  return std::pow(y, static_cast<double>(seq));
}

class VarHeap {
public:
  explicit VarHeap(const std::vector<double> &activity) : act_(activity) {}

  void grow(std::size_t n) { pos_.resize(n, -1); }
  bool contains(std::uint32_t v) const { return pos_[v] >= 0; }
  bool empty() const { return heap_.empty(); }

  void insert(std::uint32_t v) {
    if (contains(v))
      return;
    pos_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    up(heap_.size() - 1);
  }
  void bumped(std::uint32_t v) {
    if (contains(v))
      up(static_cast<std::size_t>(pos_[v]));
  }
  std::uint32_t pop() {
    const std::uint32_t top = heap_[0];
    heap_[0] = heap_.back();
    pos_[heap_[0]] = 0;
    pos_[top] = -1;
    heap_.pop_back();
    if (!heap_.empty())
      down(0);
    return top;
  }

private:
  bool before(std::uint32_t a, std::uint32_t b) const {
    return act_[a] > act_[b] || (act_[a] == act_[b] && a < b);
  }
  void up(std::size_t i) {
    const std::uint32_t v = heap_[i];
    while (i > 0) {
      const std::size_t p = (i - 1) / 2;
      if (!before(v, heap_[p]))
        break;
      heap_[i] = heap_[p];
      pos_[heap_[i]] = static_cast<int>(i);
      i = p;
    }
    heap_[i] = v;
    pos_[v] = static_cast<int>(i);
  }
  void down(std::size_t i) {
    const std::uint32_t v = heap_[i];
    while (true) {
      std::size_t c = 2 * i + 1;
      if (c >= heap_.size())
        break;
      if (c + 1 < heap_.size() && before(heap_[c + 1], heap_[c]))
        ++c;
      if (!before(heap_[c], v))
        break;
      heap_[i] = heap_[c];
      pos_[heap_[i]] = static_cast<int>(i);
      i = c;
    }
    heap_[i] = v;
    pos_[v] = static_cast<int>(i);
  }

  const std::vector<double> &act_;
  std::vector<std::uint32_t> heap_;
  std::vector<int> pos_;
};

struct ClauseRec {
  std::vector<Lit> lits;
  std::uint32_t origin = 0; // input index or derivation index
  bool learnt = false;
  bool attached = false;
  double activity = 0.0;
};

struct Derivation {
  CRef cref = kNoRef;
  std::vector<CRef> antecedents;
  std::vector<std::uint32_t> level0_vars;
};

struct Watcher {
  CRef cref;
  Lit blocker;
};

} // namespace

struct Solver::Impl {
  SolverConfig cfg;
  int nvars = 0;
  SolverStats stats;

  std::vector<ClauseRec> clauses;
  std::vector<CRef> inputs;
  std::vector<Derivation> derivations;
  std::vector<CRef> learnts; // attached learned clauses
  std::vector<std::vector<Watcher>> watches;

  std::vector<std::uint8_t> assigns;
  std::vector<std::uint8_t> polarity;
  std::vector<int> level;
  std::vector<CRef> reason;
  std::vector<Lit> trail;
  std::vector<std::size_t> trail_lim;
  std::size_t qhead = 0;

  std::vector<double> activity;
  double var_inc = 1.0;
  double cla_inc = 1.0;
  VarHeap heap{activity};
  double max_learnts = 0.0;
  // The learned-clause limit grows by 10% whenever this many conflicts
  // have passed; the interval itself grows by half each time.
  double adjust_interval = 100.0;
  double adjust_left = 100.0;

  std::vector<std::uint8_t> seen;
  std::optional<Refutation> refutation;

  Impl(int n, SolverConfig c) : cfg(c), nvars(n) {
    if (n < 0)
      fail(ErrorCode::InvalidArgument, "negative variable count");
    const auto un = static_cast<std::size_t>(n);
    watches.resize(2 * un);
    assigns.assign(un, kUndef);
    polarity.assign(un, 1);
    level.assign(un, 0);
    reason.assign(un, kNoRef);
    activity.assign(un, 0.0);
    seen.assign(un, 0);
    if (cfg.seed != 0) {
      Rng rng(cfg.seed);
      for (auto &a : activity)
        a = rng.unit() * 1e-5;
    }
    heap.grow(un);
    for (std::uint32_t v = 0; v < un; ++v)
      heap.insert(v);
  }

  std::uint8_t value(Lit l) const {
    const std::uint8_t a = assigns[var_of(l)];
    return a == kUndef ? kUndef : static_cast<std::uint8_t>(a ^ (l & 1u));
  }
  int decision_level() const { return static_cast<int>(trail_lim.size()); }

  void enqueue(Lit l, CRef from) {
    const auto v = var_of(l);
    assigns[v] = (l & 1u) ? kFalse : kTrue;
    level[v] = decision_level();
    reason[v] = from;
    trail.push_back(l);
  }

  void attach(CRef cr) {
    ClauseRec &c = clauses[cr];
    watches[c.lits[0]].push_back({cr, c.lits[1]});
    watches[c.lits[1]].push_back({cr, c.lits[0]});
    c.attached = true;
  }

  CRef propagate() {
    CRef confl = kNoRef;
    while (qhead < trail.size()) {
      const Lit p = trail[qhead++];
      const Lit false_lit = p ^ 1u;
      auto &ws = watches[false_lit];
      ++stats.propagations;
      std::size_t i = 0, j = 0;
      const std::size_t n = ws.size();
      while (i < n) {
        const Watcher w = ws[i++];
        ClauseRec &c = clauses[w.cref];
        if (!c.attached)
          continue;
        if (value(w.blocker) == kTrue) {
          ws[j++] = w;
          continue;
        }
        auto &lits = c.lits;
        if (lits[0] == false_lit)
          std::swap(lits[0], lits[1]);
        const Lit first = lits[0];
        if (first != w.blocker && value(first) == kTrue) {
          ws[j++] = {w.cref, first};
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < lits.size(); ++k) {
          if (value(lits[k]) != kFalse) {
            std::swap(lits[1], lits[k]);
            watches[lits[1]].push_back({w.cref, first});
            moved = true;
            break;
          }
        }
        if (moved)
          continue;
        ws[j++] = {w.cref, first};
        if (value(first) == kFalse) {
          confl = w.cref;
          qhead = trail.size();
          while (i < n)
            ws[j++] = ws[i++];
        } else {
          enqueue(first, w.cref);
        }
      }
      ws.resize(j);
      if (confl != kNoRef)
        return confl;
    }
    return kNoRef;
  }

  void cancel_until(int lvl) {
    if (decision_level() <= lvl)
      return;
    for (std::size_t k = trail.size(); k-- > trail_lim[static_cast<std::size_t>(lvl)];) {
      const auto v = var_of(trail[k]);
      polarity[v] = assigns[v] == kFalse ? 1 : 0;
      assigns[v] = kUndef;
      reason[v] = kNoRef;
      heap.insert(v);
    }
    trail.resize(trail_lim[static_cast<std::size_t>(lvl)]);
    qhead = trail.size();
    trail_lim.resize(static_cast<std::size_t>(lvl));
  }

  void bump_var(std::uint32_t v) {
    activity[v] += var_inc;
    if (activity[v] > 1e100) {
      for (auto &a : activity)
        a *= 1e-100;
      var_inc *= 1e-100;
    }
    heap.bumped(v);
  }
  void bump_clause(ClauseRec &c) {
    c.activity += cla_inc;
    if (c.activity > 1e20) {
      for (CRef cr : learnts)
        clauses[cr].activity *= 1e-20;
      cla_inc *= 1e-20;
    }
  }

  // First-UIP analysis with local minimisation. Fills the learned clause
  // (asserting literal first) and the derivation bookkeeping.
  int analyze(CRef confl, std::vector<Lit> &out, Derivation &deriv) {
    std::vector<std::uint32_t> level0;
    std::vector<std::uint8_t> &mark = seen;
    std::vector<std::uint32_t> touched;
    const auto note_level0 = [&](std::uint32_t v) {
      if (mark[v] == 0) {
        mark[v] = 2;
        touched.push_back(v);
        level0.push_back(v);
      }
    };

    out.clear();
    out.push_back(0);
    int path = 0;
    std::optional<Lit> p;
    std::size_t index = trail.size();
    do {
      deriv.antecedents.push_back(confl);
      ClauseRec &c = clauses[confl];
      if (c.learnt)
        bump_clause(c);
      for (Lit q : c.lits) {
        const auto v = var_of(q);
        if (p && v == var_of(*p))
          continue;
        if (mark[v] != 0)
          continue;
        if (level[v] == 0) {
          note_level0(v);
          continue;
        }
        mark[v] = 1;
        touched.push_back(v);
        bump_var(v);
        if (level[v] >= decision_level())
          ++path;
        else
          out.push_back(q);
      }
      while (mark[var_of(trail[--index])] != 1) {
      }
      p = trail[index];
      confl = reason[var_of(*p)];
      mark[var_of(*p)] = 3; // resolved away
      --path;
    } while (path > 0);
    out[0] = *p ^ 1u;

    std::size_t keep = 1;
    for (std::size_t i = 1; i < out.size(); ++i) {
      const auto v = var_of(out[i]);
      const CRef r = reason[v];
      bool removable = r != kNoRef;
      if (removable) {
        for (Lit q : clauses[r].lits) {
          const auto u = var_of(q);
          if (u != v && mark[u] != 1 && level[u] != 0) {
            removable = false;
            break;
          }
        }
      }
      if (!removable) {
        out[keep++] = out[i];
        continue;
      }
      deriv.antecedents.push_back(r);
      for (Lit q : clauses[r].lits) {
        const auto u = var_of(q);
        if (level[u] == 0)
          note_level0(u);
      }
    }
    out.resize(keep);

    for (auto v : touched)
      mark[v] = 0;

    std::sort(deriv.antecedents.begin(), deriv.antecedents.end());
    deriv.antecedents.erase(
        std::unique(deriv.antecedents.begin(), deriv.antecedents.end()),
        deriv.antecedents.end());
    std::sort(level0.begin(), level0.end());
    deriv.level0_vars = std::move(level0);

    int bt = 0;
    if (out.size() > 1) {
      std::size_t best = 1;
      for (std::size_t i = 2; i < out.size(); ++i)
        if (level[var_of(out[i])] > level[var_of(out[best])])
          best = i;
      std::swap(out[1], out[best]);
      bt = level[var_of(out[1])];
    }
    return bt;
  }

  bool locked(CRef cr) const {
    const ClauseRec &c = clauses[cr];
    const auto v = var_of(c.lits[0]);
    return reason[v] == cr && value(c.lits[0]) == kTrue;
  }

  void reduce_db() {
    std::vector<CRef> sorted = learnts;
    std::stable_sort(sorted.begin(), sorted.end(), [&](CRef a, CRef b) {
      const auto &ca = clauses[a], &cb = clauses[b];
      if (ca.lits.size() == 2 || cb.lits.size() == 2)
        return ca.lits.size() > cb.lits.size();
      return ca.activity < cb.activity;
    });
    const double extra = cla_inc / static_cast<double>(sorted.size());
    std::vector<CRef> kept;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      ClauseRec &c = clauses[sorted[i]];
      const bool drop = c.lits.size() > 2 && !locked(sorted[i]) &&
                        (i < sorted.size() / 2 || c.activity < extra);
      if (drop)
        c.attached = false;
      else
        kept.push_back(sorted[i]);
    }
    std::sort(kept.begin(), kept.end());
    learnts = std::move(kept);
    for (auto &ws : watches)
      ws.erase(std::remove_if(ws.begin(), ws.end(),
                              [&](const Watcher &w) {
                                return !clauses[w.cref].attached;
                              }),
               ws.end());
  }

  std::optional<Lit> pick_branch() {
    while (!heap.empty()) {
      const auto v = heap.pop();
      if (assigns[v] == kUndef)
        return 2 * v + polarity[v];
    }
    return std::nullopt;
  }

  void become_unsat(CRef confl) {
    Refutation r;
    r.participation.assign(static_cast<std::size_t>(nvars) + 1, 0);
    std::vector<std::uint8_t> expanded(clauses.size(), 0);
    std::vector<std::uint8_t> as_reason(clauses.size(), 0);
    std::vector<std::uint8_t> var_done(static_cast<std::size_t>(nvars), 0);
    std::vector<CRef> work;
    std::vector<std::pair<CRef, bool>> queue;

    const auto mark_var = [&](std::uint32_t v) {
      if (var_done[v])
        return;
      var_done[v] = 1;
      if (reason[v] != kNoRef)
        queue.push_back({reason[v], true});
    };

    queue.push_back({confl, true});
    while (!queue.empty()) {
      const auto [cr, is_reason] = queue.back();
      queue.pop_back();
      const ClauseRec &c = clauses[cr];
      if (is_reason && !as_reason[cr]) {
        as_reason[cr] = 1;
        for (Lit q : c.lits)
          mark_var(var_of(q));
      }
      if (expanded[cr])
        continue;
      expanded[cr] = 1;
      if (c.learnt) {
        const Derivation &d = derivations[c.origin];
        for (CRef a : d.antecedents)
          queue.push_back({a, false});
        for (auto v : d.level0_vars)
          mark_var(v);
      }
    }

    std::vector<std::uint32_t> learned_ids;
    for (CRef cr = 0; cr < clauses.size(); ++cr) {
      if (!expanded[cr])
        continue;
      const ClauseRec &c = clauses[cr];
      for (Lit q : c.lits)
        ++r.participation[var_of(q) + 1];
      if (c.learnt)
        learned_ids.push_back(c.origin);
      else
        r.core.push_back(c.origin);
    }
    std::sort(r.core.begin(), r.core.end());
    std::sort(learned_ids.begin(), learned_ids.end());
    for (auto id : learned_ids) {
      Clause out;
      for (Lit q : clauses[derivations[id].cref].lits)
        out.push_back(to_dimacs(q));
      r.learned.push_back(std::move(out));
    }
    refutation = std::move(r);
  }

  std::size_t add_input(std::span<const int> literals) {
    for (int lit : literals)
      if (lit == 0 || std::abs(lit) > nvars)
        fail(ErrorCode::InvalidArgument,
             "literal " + std::to_string(lit) + " outside 1.." +
                 std::to_string(nvars));
    cancel_until(0);
    const std::size_t index = inputs.size();
    ClauseRec c;
    c.origin = static_cast<std::uint32_t>(index);
    for (int lit : literals)
      c.lits.push_back(to_lit(lit));
    std::sort(c.lits.begin(), c.lits.end());
    c.lits.erase(std::unique(c.lits.begin(), c.lits.end()), c.lits.end());
    bool tautology = false;
    for (std::size_t k = 1; k < c.lits.size(); ++k)
      if (c.lits[k] == (c.lits[k - 1] ^ 1u))
        tautology = true;

    const CRef cr = static_cast<CRef>(clauses.size());
    clauses.push_back(std::move(c));
    inputs.push_back(cr);
    if (refutation || tautology)
      return index;

    auto &lits = clauses[cr].lits;
    std::stable_sort(lits.begin(), lits.end(), [&](Lit a, Lit b) {
      const auto rank = [&](Lit l) {
        const auto v = value(l);
        return v == kTrue ? 0 : v == kUndef ? 1 : 2;
      };
      return rank(a) < rank(b);
    });
    if (lits.empty() || value(lits[0]) == kFalse) {
      become_unsat(cr);
      return index;
    }
    if (lits.size() == 1) {
      if (value(lits[0]) == kUndef) {
        enqueue(lits[0], cr);
        if (const CRef confl = propagate(); confl != kNoRef)
          become_unsat(confl);
      }
      return index;
    }
    attach(cr);
    if (value(lits[0]) == kUndef && value(lits[1]) == kFalse) {
      enqueue(lits[0], cr);
      if (const CRef confl = propagate(); confl != kNoRef)
        become_unsat(confl);
    }
    return index;
  }

  enum class Status { Sat, Unsat, Restart };

  Status search(std::uint64_t conflict_budget) {
    std::uint64_t conflicts = 0;
    std::vector<Lit> learnt;
    while (true) {
      const CRef confl = propagate();
      if (confl != kNoRef) {
        ++stats.conflicts;
        ++conflicts;
        if (decision_level() == 0) {
          become_unsat(confl);
          return Status::Unsat;
        }
        Derivation deriv;
        const int bt = analyze(confl, learnt, deriv);
        cancel_until(bt);
        ClauseRec c;
        c.lits = learnt;
        c.learnt = true;
        c.origin = static_cast<std::uint32_t>(derivations.size());
        const CRef cr = static_cast<CRef>(clauses.size());
        deriv.cref = cr;
        derivations.push_back(std::move(deriv));
        clauses.push_back(std::move(c));
        ++stats.learned;
        if (learnt.size() > 1) {
          attach(cr);
          learnts.push_back(cr);
          bump_clause(clauses[cr]);
        }
        enqueue(learnt[0], cr);
        var_inc /= cfg.var_decay;
        cla_inc /= cfg.clause_decay;
        if (--adjust_left <= 0) {
          adjust_interval *= 1.5;
          adjust_left = adjust_interval;
          max_learnts *= 1.1;
        }
        continue;
      }
      if (conflicts >= conflict_budget) {
        cancel_until(0);
        return Status::Restart;
      }
      if (static_cast<double>(learnts.size()) >= max_learnts + static_cast<double>(trail.size()))
        reduce_db();
      const auto next = pick_branch();
      if (!next)
        return Status::Sat;
      ++stats.decisions;
      trail_lim.push_back(trail.size());
      enqueue(*next, kNoRef);
    }
  }

  SatOutcome solve() {
    ++stats.solves;
    if (refutation)
      return SatOutcome(*refutation);
    cancel_until(0);
    if (const CRef confl = propagate(); confl != kNoRef) {
      become_unsat(confl);
      return SatOutcome(*refutation);
    }
    max_learnts = std::max(1000.0, static_cast<double>(inputs.size()) * cfg.learnt_ratio);
    adjust_interval = adjust_left = 100.0;
    for (std::uint64_t round = 0;; ++round) {
      const auto budget = static_cast<std::uint64_t>(
          luby(2.0, round) * static_cast<double>(cfg.restart_unit));
      const Status st = search(budget);
      if (st == Status::Unsat)
        return SatOutcome(*refutation);
      if (st == Status::Sat) {
        Model m;
        m.values.assign(static_cast<std::size_t>(nvars) + 1, 0);
        for (std::size_t v = 0; v < static_cast<std::size_t>(nvars); ++v)
          m.values[v + 1] = assigns[v] == kTrue ? 1 : 0;
        cancel_until(0);
        return SatOutcome(std::move(m));
      }
      ++stats.restarts;
    }
  }
};

Solver::Solver(int num_vars, SolverConfig cfg)
    : impl_(std::make_unique<Impl>(num_vars, cfg)) {}

Solver::Solver(const CnfFormula &f, SolverConfig cfg) : Solver(f.num_vars, cfg) {
  for (const auto &c : f.clauses)
    add_clause(c);
}

Solver::~Solver() = default;
Solver::Solver(Solver &&) noexcept = default;
Solver &Solver::operator=(Solver &&) noexcept = default;

int Solver::num_vars() const noexcept { return impl_->nvars; }
std::size_t Solver::num_input_clauses() const noexcept {
  return impl_->inputs.size();
}
std::size_t Solver::add_clause(std::span<const int> literals) {
  return impl_->add_input(literals);
}
SatOutcome Solver::solve() { return impl_->solve(); }
const SolverStats &Solver::stats() const noexcept { return impl_->stats; }

SatOutcome solve(const CnfFormula &f, const SolverConfig &cfg) {
  check_well_formed(f);
  Solver s(f, cfg);
  return s.solve();
}

SatOutcome solve_incremental(const CnfFormula &f, std::span<const Clause> added,
                             const SolverConfig &cfg) {
  check_well_formed(f);
  Solver s(f, cfg);
  s.solve();
  for (const auto &c : added)
    s.add_clause(c);
  return s.solve();
}

namespace {

// Naive unit propagation used only for replaying refutations.
bool propagates_to_conflict(int nvars, const std::vector<const Clause *> &db,
                            const Clause &assumed_false) {
  std::vector<std::int8_t> val(static_cast<std::size_t>(nvars) + 1, 0);
  for (int lit : assumed_false) {
    const auto v = static_cast<std::size_t>(std::abs(lit));
    const std::int8_t want = lit > 0 ? -1 : 1;
    if (val[v] == -want)
      return true;
    val[v] = want;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Clause *c : db) {
      int unassigned = 0, last = 0;
      bool sat = false;
      for (int lit : *c) {
        const std::int8_t v = val[static_cast<std::size_t>(std::abs(lit))];
        if (v == 0) {
          // Input clauses may repeat a literal.
          if (lit != last)
            ++unassigned;
          last = lit;
        } else if ((v > 0) == (lit > 0)) {
          sat = true;
          break;
        }
      }
      if (sat)
        continue;
      if (unassigned == 0)
        return true;
      if (unassigned == 1) {
        val[static_cast<std::size_t>(std::abs(last))] = last > 0 ? 1 : -1;
        changed = true;
      }
    }
  }
  return false;
}

} // namespace

bool verify_refutation(const CnfFormula &f, const Refutation &r,
                       std::span<const Clause> added) {
  std::vector<const Clause *> db;
  for (auto i : r.core) {
    if (i < f.clauses.size())
      db.push_back(&f.clauses[i]);
    else if (i - f.clauses.size() < added.size())
      db.push_back(&added[i - f.clauses.size()]);
    else
      return false;
  }
  for (const auto &c : r.learned) {
    if (!propagates_to_conflict(f.num_vars, db, c))
      return false;
    db.push_back(&c);
  }
  return propagates_to_conflict(f.num_vars, db, {});
}

} // namespace orthosat
