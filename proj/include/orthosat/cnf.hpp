/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orthosat {

// DIMACS-style literal: +v or -v for variable v >= 1.
using Clause = std::vector<int>;

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;

  void add(Clause c) { clauses.push_back(std::move(c)); }
  bool operator==(const CnfFormula &) const = default;
};

// Throws InvalidArgument when a literal is 0 or names a variable outside
// [1, num_vars].
void check_well_formed(const CnfFormula &f);

// `p cnf V C` header preceded by one `c` line per comment entry.
std::string to_dimacs(const CnfFormula &f,
                      std::span<const std::string> comments = {});
CnfFormula parse_dimacs(std::string_view text);

// values[v] is the truth value of variable v; values[0] is unused.
bool satisfies(std::span<const std::uint8_t> values, const Clause &c);
bool satisfies(std::span<const std::uint8_t> values, const CnfFormula &f);

} // namespace orthosat
