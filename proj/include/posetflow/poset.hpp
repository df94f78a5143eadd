#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "posetflow/dag.hpp"
#include "posetflow/numeric.hpp"

namespace posetflow {

using ElementId = std::size_t;

struct Cover {
  ElementId lower;
  ElementId upper;

  auto operator<=>(const Cover&) const = default;
};

struct Level {
  std::size_t rank;
  std::vector<ElementId> members;
  BigInt weight;
};

struct AntichainWitness {
  std::vector<ElementId> members;  // sorted ascending
  BigInt total_weight;
};

// A finite graded poset given by its Hasse diagram, with exact positive
// weights. Immutable once built; minimal elements have rank 0 and every cover
// raises rank by exactly one.
class GradedPoset {
 public:
  // The empty poset.
  GradedPoset() = default;

  // Validates and normalizes: covers are sorted and deduplicated, ranks are
  // recomputed from the cover relation.
  // Throws CycleDetected, NotGraded, NonPositiveWeight, UnknownElement,
  // SizeMismatch.
  static GradedPoset build(std::vector<std::string> labels,
                           std::vector<Cover> covers,
                           std::vector<BigInt> weights);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(ElementId x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Cover>& covers() const noexcept { return covers_; }
  std::size_t rank(ElementId x) const { return ranks_.at(x); }
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
  const BigInt& weight(ElementId x) const { return weights_.at(x); }
  const std::vector<BigInt>& weights() const noexcept { return weights_; }
  const std::vector<ElementId>& upper_covers(ElementId x) const { return up_.at(x); }
  const std::vector<ElementId>& lower_covers(ElementId x) const { return down_.at(x); }
  const Adjacency& up_adjacency() const noexcept { return up_; }

  std::size_t max_rank() const noexcept { return max_rank_; }
  // Number of elements on a longest chain minus one.
  std::size_t height() const noexcept { return max_rank_; }
  BigInt total_weight() const;

  bool is_cover(ElementId lower, ElementId upper) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Cover> covers_;
  std::vector<BigInt> weights_;
  std::vector<std::size_t> ranks_;
  Adjacency up_;
  Adjacency down_;
  std::size_t max_rank_ = 0;
};

GradedPoset build_poset(std::vector<std::string> labels, std::vector<Cover> covers,
                        std::vector<BigInt> weights);

// Levels ordered by rank 0..max_rank, members ascending.
std::vector<Level> levels(const GradedPoset& poset);
std::vector<BigInt> level_weights(const GradedPoset& poset);

struct AntichainCheck {
  bool is_antichain = true;
  std::optional<std::pair<ElementId, ElementId>> violation;  // (lower, upper)

  explicit operator bool() const noexcept { return is_antichain; }
};

// Throws UnknownElement for ids out of range.
AntichainCheck is_antichain(const GradedPoset& poset, std::span<const ElementId> subset);

BigInt subset_weight(const GradedPoset& poset, std::span<const ElementId> subset);

// (p, q) has id p * |Q| + q, so (P x Q) x R and P x (Q x R) share ids.
GradedPoset product(const GradedPoset& lhs, const GradedPoset& rhs);

GradedPoset singleton(BigInt weight = 1);
// Chain of m elements with the given weights, bottom first.
GradedPoset chain(std::size_t m, std::vector<BigInt> weights);
GradedPoset chain(std::size_t m);
// Leaves 1..m-1 all covered by the top element m; unit weights.
GradedPoset claw(std::size_t m);

// Connected components of the Hasse diagram, each sorted, ordered by
// smallest member.
std::vector<std::vector<ElementId>> connected_components(const GradedPoset& poset);

// Weight- and rank-preserving isomorphism lhs -> rhs (result[x] is the image of
// x), found by backtracking. Intended for small posets.
std::optional<std::vector<ElementId>> find_isomorphism(const GradedPoset& lhs,
                                                       const GradedPoset& rhs);

}  // namespace posetflow
