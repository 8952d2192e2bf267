/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "orthosat/cnf.hpp"

#include <cstdlib>
#include <sstream>

#include "orthosat/error.hpp"

namespace orthosat {

void check_well_formed(const CnfFormula &f) {
  if (f.num_vars < 0)
    fail(ErrorCode::InvalidArgument, "negative variable count");
  for (std::size_t i = 0; i < f.clauses.size(); ++i)
    for (int lit : f.clauses[i])
      if (lit == 0 || std::abs(lit) > f.num_vars)
        fail(ErrorCode::InvalidArgument,
             "clause " + std::to_string(i) + " has literal " +
                 std::to_string(lit) + " outside 1.." +
                 std::to_string(f.num_vars));
}

std::string to_dimacs(const CnfFormula &f, std::span<const std::string> comments) {
  std::ostringstream out;
  for (const auto &c : comments)
    out << "c " << c << '\n';
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto &c : f.clauses) {
    for (int lit : c)
      out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  CnfFormula f;
  std::string line;
  bool header = false;
  std::size_t expected = 0;
  Clause current;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == 'c' || tok[0] == '%')
      continue;
    if (tok == "p") {
      std::string kind;
      long vars = -1, clauses = -1;
      if (header || !(ls >> kind >> vars >> clauses) || kind != "cnf" ||
          vars < 0 || clauses < 0)
        fail(ErrorCode::Parse,
             "bad DIMACS header on line " + std::to_string(line_no));
      header = true;
      f.num_vars = static_cast<int>(vars);
      expected = static_cast<std::size_t>(clauses);
      continue;
    }
    if (!header)
      fail(ErrorCode::Parse, "clause before DIMACS header on line " +
                                 std::to_string(line_no));
    do {
      char *end = nullptr;
      const long lit = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0')
        fail(ErrorCode::Parse, "bad literal '" + tok + "' on line " +
                                   std::to_string(line_no));
      if (lit == 0) {
        f.clauses.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(static_cast<int>(lit));
      }
    } while (ls >> tok);
  }
  if (!header)
    fail(ErrorCode::Parse, "missing DIMACS header");
  if (!current.empty())
    fail(ErrorCode::Parse, "last clause is not 0-terminated");
  if (f.clauses.size() != expected)
    fail(ErrorCode::Parse, "header announces " + std::to_string(expected) +
                               " clauses, found " +
                               std::to_string(f.clauses.size()));
  try {
    check_well_formed(f);
  } catch (const Error &e) {
    fail(ErrorCode::Parse, e.what());
  }
  return f;
}

bool satisfies(std::span<const std::uint8_t> values, const Clause &c) {
  for (int lit : c) {
    const auto v = static_cast<std::size_t>(std::abs(lit));
    if (v < values.size() && (values[v] != 0) == (lit > 0))
      return true;
  }
  return false;
}

bool satisfies(std::span<const std::uint8_t> values, const CnfFormula &f) {
  for (const auto &c : f.clauses)
    if (!satisfies(values, c))
      return false;
  return true;
}

} // namespace orthosat
