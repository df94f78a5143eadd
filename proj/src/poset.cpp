#include "posetflow/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "posetflow/error.hpp"

namespace posetflow {

GradedPoset GradedPoset::build(std::vector<std::string> labels, std::vector<Cover> covers,
                               std::vector<BigInt> weights) {
  const std::size_t n = labels.size();
  if (weights.size() != n) {
    throw Error(ErrorCode::SizeMismatch, std::to_string(labels.size()) + " labels but " +
                                             std::to_string(weights.size()) + " weights");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (weights[x] <= 0) {
      throw Error(ErrorCode::NonPositiveWeight,
                  "element " + std::to_string(x) + " has weight " + weights[x].str());
    }
  }
  for (const Cover& c : covers) {
    if (c.lower >= n || c.upper >= n) {
      throw Error(ErrorCode::UnknownElement, "cover (" + std::to_string(c.lower) + ", " +
                                                 std::to_string(c.upper) + ") out of range");
    }
    if (c.lower == c.upper) {
      throw Error(ErrorCode::CycleDetected, "self-cover on " + std::to_string(c.lower));
    }
  }
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());

  GradedPoset p;
  p.labels_ = std::move(labels);
  p.weights_ = std::move(weights);
  p.covers_ = std::move(covers);
  p.up_.assign(n, {});
  p.down_.assign(n, {});
  for (const Cover& c : p.covers_) {
    p.up_[c.lower].push_back(c.upper);
    p.down_[c.upper].push_back(c.lower);
  }
  for (auto& d : p.down_) std::sort(d.begin(), d.end());

  const auto order = topological_order(p.up_);
  if (!order) throw Error(ErrorCode::CycleDetected, "cover relation has a cycle");

  p.ranks_.assign(n, 0);
  for (ElementId x : *order) {
    const auto& below = p.down_[x];
    if (below.empty()) continue;
    const std::size_t r = p.ranks_[below.front()];
    for (ElementId y : below) {
      if (p.ranks_[y] != r) {
        throw Error(ErrorCode::NotGraded,
                    "element " + std::to_string(x) + " covers elements of ranks " +
                        std::to_string(r) + " and " + std::to_string(p.ranks_[y]));
      }
    }
    p.ranks_[x] = r + 1;
  }
  p.max_rank_ = n == 0 ? 0 : *std::max_element(p.ranks_.begin(), p.ranks_.end());
  return p;
}

BigInt GradedPoset::total_weight() const {
  BigInt sum = 0;
  for (const auto& w : weights_) sum += w;
  return sum;
}

bool GradedPoset::is_cover(ElementId lower, ElementId upper) const {
  return std::binary_search(covers_.begin(), covers_.end(), Cover{lower, upper});
}

GradedPoset build_poset(std::vector<std::string> labels, std::vector<Cover> covers,
                        std::vector<BigInt> weights) {
  return GradedPoset::build(std::move(labels), std::move(covers), std::move(weights));
}

std::vector<Level> levels(const GradedPoset& poset) {
  std::vector<Level> result;
  if (poset.size() == 0) return result;
  result.resize(poset.max_rank() + 1);
  for (std::size_t r = 0; r < result.size(); ++r) result[r].rank = r;
  for (ElementId x = 0; x < poset.size(); ++x) {
    Level& level = result[poset.rank(x)];
    level.members.push_back(x);
    level.weight += poset.weight(x);
  }
  return result;
}

std::vector<BigInt> level_weights(const GradedPoset& poset) {
  std::vector<BigInt> result;
  for (auto& level : levels(poset)) result.push_back(std::move(level.weight));
  return result;
}

AntichainCheck is_antichain(const GradedPoset& poset, std::span<const ElementId> subset) {
  std::size_t top = 0;
  for (ElementId x : subset) {
    if (x >= poset.size()) {
      throw Error(ErrorCode::UnknownElement, "element " + std::to_string(x) + " out of range");
    }
    top = std::max(top, poset.rank(x));
  }
  // Paths between members never climb above the highest member's rank.
  std::vector<char> allowed(poset.size());
  for (ElementId x = 0; x < poset.size(); ++x) allowed[x] = poset.rank(x) <= top;

  AntichainCheck check;
  if (auto pair = find_comparable_pair(poset.up_adjacency(), subset, &allowed)) {
    check.is_antichain = false;
    check.violation = pair;
  }
  return check;
}

BigInt subset_weight(const GradedPoset& poset, std::span<const ElementId> subset) {
  BigInt sum = 0;
  for (ElementId x : subset) sum += poset.weight(x);
  return sum;
}

GradedPoset product(const GradedPoset& lhs, const GradedPoset& rhs) {
  const std::size_t m = rhs.size();
  const std::size_t n = lhs.size() * m;
  std::vector<std::string> labels(n);
  std::vector<BigInt> weights(n);
  for (ElementId p = 0; p < lhs.size(); ++p) {
    for (ElementId q = 0; q < m; ++q) {
      labels[p * m + q] = "(" + lhs.label(p) + ", " + rhs.label(q) + ")";
      weights[p * m + q] = lhs.weight(p) * rhs.weight(q);
    }
  }
  std::vector<Cover> covers;
  covers.reserve(lhs.covers().size() * m + rhs.covers().size() * lhs.size());
  for (const Cover& c : lhs.covers()) {
    for (ElementId q = 0; q < m; ++q) covers.push_back({c.lower * m + q, c.upper * m + q});
  }
  for (ElementId p = 0; p < lhs.size(); ++p) {
    for (const Cover& c : rhs.covers()) covers.push_back({p * m + c.lower, p * m + c.upper});
  }
  return GradedPoset::build(std::move(labels), std::move(covers), std::move(weights));
}

GradedPoset singleton(BigInt weight) {
  return GradedPoset::build({"1"}, {}, {std::move(weight)});
}

GradedPoset chain(std::size_t m, std::vector<BigInt> weights) {
  if (m == 0) throw Error(ErrorCode::InvalidInput, "chain needs at least one element");
  if (weights.size() != m) {
    throw Error(ErrorCode::SizeMismatch, "chain of " + std::to_string(m) + " elements got " +
                                             std::to_string(weights.size()) + " weights");
  }
  std::vector<std::string> labels(m);
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = std::to_string(i + 1);
    if (i + 1 < m) covers.push_back({i, i + 1});
  }
  return GradedPoset::build(std::move(labels), std::move(covers), std::move(weights));
}

GradedPoset chain(std::size_t m) { return chain(m, std::vector<BigInt>(m, 1)); }

GradedPoset claw(std::size_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidInput, "claw needs at least one element");
  std::vector<std::string> labels(m);
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = std::to_string(i + 1);
    if (i + 1 < m) covers.push_back({i, m - 1});
  }
  return GradedPoset::build(std::move(labels), std::move(covers), std::vector<BigInt>(m, 1));
}

std::vector<std::vector<ElementId>> connected_components(const GradedPoset& poset) {
  const std::size_t n = poset.size();
  std::vector<std::size_t> component(n, n);
  std::vector<std::vector<ElementId>> result;
  for (ElementId start = 0; start < n; ++start) {
    if (component[start] != n) continue;
    const std::size_t id = result.size();
    result.emplace_back();
    std::vector<ElementId> stack{start};
    component[start] = id;
    while (!stack.empty()) {
      const ElementId x = stack.back();
      stack.pop_back();
      result[id].push_back(x);
      for (const auto* adj : {&poset.upper_covers(x), &poset.lower_covers(x)}) {
        for (ElementId y : *adj) {
          if (component[y] == n) {
            component[y] = id;
            stack.push_back(y);
          }
        }
      }
    }
    std::sort(result[id].begin(), result[id].end());
  }
  return result;
}

std::optional<std::vector<ElementId>> find_isomorphism(const GradedPoset& lhs,
                                                       const GradedPoset& rhs) {
  const std::size_t n = lhs.size();
  if (n != rhs.size() || lhs.covers().size() != rhs.covers().size()) return std::nullopt;
  if (level_weights(lhs) != level_weights(rhs)) return std::nullopt;

  std::vector<ElementId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementId a, ElementId b) { return lhs.rank(a) < lhs.rank(b); });

  auto compatible = [&](ElementId x, ElementId y) {
    return lhs.rank(x) == rhs.rank(y) && lhs.weight(x) == rhs.weight(y) &&
           lhs.upper_covers(x).size() == rhs.upper_covers(y).size() &&
           lhs.lower_covers(x).size() == rhs.lower_covers(y).size();
  };

  std::vector<ElementId> image(n, n);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == n) return true;
    const ElementId x = order[depth];
    for (ElementId y = 0; y < n; ++y) {
      if (used[y] || !compatible(x, y)) continue;
      // Lower covers are already mapped since we go by rank.
      bool ok = true;
      for (ElementId below : lhs.lower_covers(x)) {
        if (!rhs.is_cover(image[below], y)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = 1;
      if (extend(depth + 1)) return true;
      used[y] = 0;
      image[x] = n;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

}  // namespace posetflow
