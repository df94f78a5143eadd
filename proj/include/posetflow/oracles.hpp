#pragma once

#include <cstddef>

#include "posetflow/network.hpp"
#include "posetflow/poset.hpp"

namespace posetflow {

inline constexpr std::size_t kDefaultOracleLimit = 24;

// kDefaultOracleLimit unless POSETFLOW_ORACLE_LIMIT holds a positive integer.
std::size_t default_oracle_limit();

// Exhaustive maximum-weight antichain with branch-and-bound. Among all optimal
// antichains the lexicographically smallest id set is returned.
// Throws TooLargeForOracle when poset.size() > limit (limit is capped at 64).
AntichainWitness brute_force_width(const GradedPoset& poset,
                                   std::size_t limit = default_oracle_limit());

// Maximum-weight subset containing no chain of k + 1 elements.
AntichainWitness brute_force_k_width(const GradedPoset& poset, std::size_t k,
                                     std::size_t limit = default_oracle_limit());

// Minimum-weight vertex set meeting every source-to-sink path, by enumerating
// all vertex subsets. Ties go to the smallest bitmask. Throws
// TooLargeForOracle above `limit` vertices (capped at 24) and InvalidInput for
// isolated vertices.
struct VertexCutWitness {
  std::vector<VertexId> members;
  BigInt total_weight;
};
VertexCutWitness brute_force_min_vertex_cut(const Network& network, std::size_t limit = 20);

}  // namespace posetflow
