#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "posetflow/network.hpp"

namespace posetflow {

// Weighted bipartite graph with every edge directed lower -> upper.
// Edges are (lower index, upper index) pairs.
struct BipartiteGraph {
  std::vector<BigInt> lower_weights;
  std::vector<BigInt> upper_weights;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct NormalizedFlowResult {
  bool feasible = false;
  // Aligned with BipartiteGraph::edges; set when feasible. Lower vertex x
  // sends w(x)/w(lower side) in total, upper vertex y receives w(y)/w(upper side).
  std::vector<Rational> flow;
  // Set when infeasible: lower-side X with w(X) w(upper) > w(D(X)) w(lower),
  // read off the minimum cut.
  std::vector<std::size_t> violating_set;
};

// Exact decision by integer max flow on the scaled network
// source -> x (w(x) w(T)), x -> y (w(S) w(T)), y -> sink (w(y) w(S)).
// Throws NotBipartite for edges naming missing vertices; NonPositiveWeight.
NormalizedFlowResult normalized_flow(const BipartiteGraph& graph);

// Same, on a network whose vertices are all sources or sinks.
// Throws NotBipartite when an intermediate vertex exists.
NormalizedFlowResult normalized_flow(const Network& network);
BipartiteGraph bipartite_view(const Network& network,
                              std::vector<VertexId>* lower_ids = nullptr,
                              std::vector<VertexId>* upper_ids = nullptr);

inline constexpr std::size_t kNmcOracleLimit = 20;

struct NmcResult {
  bool holds = true;
  std::vector<std::size_t> counterexample;  // first failing X in lexicographic order
};

// Checks w(X) w(upper) <= w(D(X)) w(lower) for all nonempty X of the lower
// side. Throws TooLargeForOracle when the lower side exceeds `limit` (<= 62).
NmcResult nmc_bruteforce(const BipartiteGraph& graph, std::size_t limit = kNmcOracleLimit);

// True iff the flow meets both families of normalized-flow equalities exactly.
bool is_normalized_flow(const BipartiteGraph& graph, const std::vector<Rational>& flow);

}  // namespace posetflow
