#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "posetflow/network.hpp"
#include "posetflow/normalized.hpp"
#include "posetflow/poset.hpp"

namespace posetflow {

using Rng = std::mt19937_64;

// Random graded poset with 1..max_elements elements and weights in
// 1..max_weight. Every element above rank 0 gets at least one lower cover.
// Element ids are shuffled so rank order and id order differ.
GradedPoset random_graded_poset(Rng& rng, std::size_t max_elements = 15,
                                std::uint32_t max_weight = 9);

// Random acyclic network with 2..max_vertices vertices, capacities in
// 1..max_capacity and no isolated vertex.
Network random_network(Rng& rng, std::size_t max_vertices = 14, std::uint32_t max_capacity = 9);

// Random bipartite graph with 1..max_side vertices per side. Edge density is
// drawn per instance so both feasible and infeasible cases occur.
BipartiteGraph random_bipartite(Rng& rng, std::size_t max_side = 10, std::uint32_t max_weight = 9);

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string first_failure;  // empty when all trials agree
  std::string note;           // suite-specific counters

  bool passed() const { return failures == 0 && trials > 0; }
};

// min_flow antichain weight vs brute_force_width on random posets.
SuiteResult suite_width_oracle(std::uint64_t seed, std::size_t trials);
// max_flow value vs exhaustive minimum vertex cut on random networks.
SuiteResult suite_max_flow_cut(std::uint64_t seed, std::size_t trials);
// normalized_flow feasibility vs nmc_bruteforce on random bipartite graphs.
SuiteResult suite_nmc_duality(std::uint64_t seed, std::size_t trials);

std::vector<SuiteResult> run_property_suites(std::uint64_t seed, std::size_t trials);

}  // namespace posetflow
