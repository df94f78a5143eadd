#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "posetflow/normalized.hpp"
#include "posetflow/poset.hpp"

namespace posetflow {

// Maximum antichain weight via minimum flow on the Hasse network. Isolated
// elements form their own components and join the witness directly.
AntichainWitness width(const GradedPoset& poset);

struct RankPairResult {
  std::size_t rank = 0;  // pair [N_rank, N_rank+1]
  std::vector<ElementId> lower;
  std::vector<ElementId> upper;
  BipartiteGraph graph;  // covers between the two levels, indices into lower/upper
  bool feasible = false;
  std::vector<Rational> flow;              // normalized flow when feasible
  std::vector<ElementId> violating_set;    // element ids of X when infeasible
  bool violating_set_from_oracle = false;  // brute-force NMC (else min cut)
};

struct NfpReport {
  std::vector<RankPairResult> pairs;
  bool all_feasible() const;
};

// Runs the rank-pair checks on up to `jobs` threads; results ordered by rank.
NfpReport check_nfp(const GradedPoset& poset, unsigned jobs = 1);

struct SpernerReport {
  std::string name;
  BigInt width;
  AntichainWitness witness;
  std::size_t max_level_rank = 0;
  BigInt max_level_weight;
  std::vector<BigInt> level_weights;
  bool verdict = false;  // width == max level weight
  NfpReport nfp;
};

SpernerReport is_sperner(const GradedPoset& poset, std::string name = {}, unsigned jobs = 1);

// Sum of the k largest binomial coefficients C(n, 0..n). Requires k <= n + 1.
BigInt erdos_k_width_formula(unsigned n, unsigned k);

struct ProofInequalityTerm {
  std::size_t k = 0;
  Rational lhs;  // s(n,k-1) / (s(n,k-1) + n s(n,k))
  Rational rhs;  // s(n,k) / (s(n,k) + n s(n,k+1))
  bool ratio_holds = false;
  bool log_concave = false;  // s(n,k-1) s(n,k+1) <= s(n,k)^2
};

struct ProofInequalityReport {
  std::size_t n = 0;
  std::vector<ProofInequalityTerm> terms;  // k = 1..n
  bool holds() const;
};

// Checks the two-chain normalized-matching inequality on every consecutive
// rank pair of row n of the first-kind Stirling triangle, alongside row
// log-concavity. Throws std::logic_error if an instance has log-concavity
// without the ratio inequality.
ProofInequalityReport proof_inequality(std::size_t n);

}  // namespace posetflow
