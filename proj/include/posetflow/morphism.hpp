#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "posetflow/families.hpp"
#include "posetflow/network.hpp"
#include "posetflow/normalized.hpp"

namespace posetflow {

// Vertex map between networks claimed to be a flow morphism.
struct FlowMorphism {
  Network domain;
  Network codomain;
  std::vector<VertexId> vertex_map;  // domain vertex -> codomain vertex

  std::vector<std::vector<VertexId>> fibers() const;
};

struct AxiomResult {
  bool passed = true;
  std::vector<std::string> failures;
};

struct EdgeFiberFlow {
  Edge codomain_edge;
  std::vector<VertexId> lower_fiber;
  std::vector<VertexId> upper_fiber;
  BipartiteGraph graph;
  NormalizedFlowResult result;
};

struct MorphismReport {
  AxiomResult epimorphism;        // 1: edges map to edges or collapse; onto
  AxiomResult terminals;          // 2: preimages of sources/sinks
  AxiomResult capacity;           // 3: fiber capacity sums
  AxiomResult normalized_fibers;  // 4: every edge preimage has a normalized flow
  std::vector<EdgeFiberFlow> fiber_flows;

  bool passed() const {
    return epimorphism.passed && terminals.passed && capacity.passed &&
           normalized_fibers.passed;
  }
};

// Checks each axiom exactly; failures become report entries. Per-edge
// normalized-flow checks run on up to `jobs` threads.
MorphismReport verify_flow_morphism(const FlowMorphism& phi, unsigned jobs = 1);

// Codomain of the collapse of S_{n+1}: lower copies at k cycles go to
// left_k (capacity n s(n,k)), the raised copy at k cycles to right_k
// (capacity s(n,k-1)).
struct TwoChainCollapse {
  std::size_t n = 0;
  SymmetricGroupPoset domain_poset;  // S_{n+1}
  FlowMorphism morphism;
  std::vector<VertexId> left;   // left[k] for k = 1..n, index 0 unused
  std::vector<VertexId> right;  // right[k] for k = 2..n+1, indices 0,1 unused
};

inline constexpr std::size_t kMaxTwoChainN = 6;  // n + 1 <= 7

TwoChainCollapse collapse_to_two_chain(std::size_t n);

// One chain vertex per rank, capacity = level weight, map = rank.
FlowMorphism collapse_to_chain(const GradedPoset& poset);

// psi after phi. Throws InvalidInput unless phi.codomain and psi.domain agree.
FlowMorphism compose(const FlowMorphism& phi, const FlowMorphism& psi);

// Union of the fibers over an antichain of the codomain. Requires a passing
// report for phi (MorphismUnverified) and an antichain argument (NotAntichain).
std::vector<VertexId> pull_back_antichain(const FlowMorphism& phi, const MorphismReport& report,
                                          std::span<const VertexId> antichain);

FlowMorphism identity_morphism(const Network& network);

}  // namespace posetflow
