/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstddef>
#include <cstdint>

#include "orthosat/graph.hpp"
#include "orthosat/shape.hpp"

namespace orthosat {

struct GeneratorBudget {
  std::size_t draws_per_edge = 100; // pair draws per attempt, times |E|
  std::size_t attempts = 5000;      // whole-instance regenerations
};

// floor(n * density), tolerant of binary rounding just below an integer.
std::size_t target_edge_count(std::size_t n, double density);

// Connected simple graph with max degree 4 and exactly m edges, built by
// drawing random vertex pairs and skipping those that would create a loop,
// a parallel edge or a degree above 4. Disconnected results are discarded
// and regenerated.
Graph generate_random_deg4_edges(std::size_t n, std::size_t m,
                                 std::uint64_t seed,
                                 GeneratorBudget budget = {});

Graph generate_random_deg4(std::size_t n, double density, std::uint64_t seed,
                           GeneratorBudget budget = {});

// Shaped graph in which exactly one simple cycle (the outer cycle) is
// incomplete while the number of simple cycles grows exponentially in i.
ShapedGraph adversarial_family(std::size_t i);

// Twelve-vertex shaped graph whose vertical classes {9,7,8,11,4} and
// {10,5,1,0,6} point at each other in both directions, making the X-axis
// auxiliary graph cyclic. Also contains the complete 4-cycle 5,2,3,1.
ShapedGraph aligned_conflict_example();

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

} // namespace orthosat
