#include "posetflow/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

#include "posetflow/error.hpp"

namespace posetflow {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaskBits = 64;

Mask bit(std::size_t i) { return Mask{1} << i; }

void check_limit(const GradedPoset& poset, std::size_t limit) {
  limit = std::min(limit, kMaskBits);
  if (poset.size() > limit) {
    throw Error(ErrorCode::TooLargeForOracle, std::to_string(poset.size()) +
                                                  " elements exceed the oracle bound of " +
                                                  std::to_string(limit));
  }
}

// below[x]: elements strictly below x.
std::vector<Mask> strict_down_sets(const GradedPoset& poset) {
  Reachability reach(poset.up_adjacency());
  std::vector<Mask> below(poset.size(), 0);
  for (ElementId x = 0; x < poset.size(); ++x) {
    const auto& desc = reach.descendants(x);
    for (ElementId y = 0; y < poset.size(); ++y) {
      if (y != x && desc.test(y)) below[y] |= bit(x);
    }
  }
  return below;
}

bool fits_u64(const GradedPoset& poset) {
  return poset.total_weight() < BigInt(std::numeric_limits<std::int64_t>::max());
}

template <class W>
std::vector<W> convert_weights(const GradedPoset& poset) {
  std::vector<W> w;
  w.reserve(poset.size());
  for (const auto& x : poset.weights()) w.push_back(static_cast<W>(x));
  return w;
}

template <class W>
class WidthSearch {
 public:
  WidthSearch(std::vector<W> weights, std::vector<Mask> comparable)
      : w_(std::move(weights)), comparable_(std::move(comparable)) {}

  Mask run() {
    const std::size_t n = w_.size();
    const Mask all = n == kMaskBits ? ~Mask{0} : bit(n) - 1;
    dfs(all, 0, W(0));
    return best_set_;
  }

 private:
  W sum(Mask set) const {
    W total(0);
    while (set) {
      total += w_[std::countr_zero(set)];
      set &= set - 1;
    }
    return total;
  }

  // `allowed` holds the undecided elements still compatible with `chosen`.
  void dfs(Mask allowed, Mask chosen, W current) {
    if (!allowed) {
      if (current > best_) {
        best_ = current;
        best_set_ = chosen;
      }
      return;
    }
    if (current + sum(allowed) <= best_) return;
    const std::size_t j = std::countr_zero(allowed);
    dfs(allowed & ~bit(j) & ~comparable_[j], chosen | bit(j), current + w_[j]);
    dfs(allowed & ~bit(j), chosen, current);
  }

  std::vector<W> w_;
  std::vector<Mask> comparable_;
  W best_{0};
  Mask best_set_ = 0;
};

template <class W>
class KWidthSearch {
 public:
  KWidthSearch(std::vector<W> weights, std::vector<Mask> below, std::vector<std::size_t> order,
               std::size_t k)
      : w_(std::move(weights)),
        below_(std::move(below)),
        order_(std::move(order)),
        k_(k),
        chain_len_(w_.size(), 0),
        suffix_(w_.size() + 1, W(0)) {
    for (std::size_t t = w_.size(); t-- > 0;) suffix_[t] = suffix_[t + 1] + w_[order_[t]];
  }

  Mask run() {
    dfs(0, 0, W(0));
    return best_set_;
  }

 private:
  void dfs(std::size_t t, Mask chosen, W current) {
    if (t == order_.size()) {
      if (current > best_) {
        best_ = current;
        best_set_ = chosen;
      }
      return;
    }
    if (current + suffix_[t] <= best_) return;
    const std::size_t x = order_[t];
    // Longest chain in chosen ending at x; every element below x precedes it in order_.
    std::size_t longest = 0;
    for (Mask m = chosen & below_[x]; m; m &= m - 1) {
      longest = std::max(longest, chain_len_[std::countr_zero(m)]);
    }
    if (longest + 1 <= k_) {
      chain_len_[x] = longest + 1;
      dfs(t + 1, chosen | bit(x), current + w_[x]);
      chain_len_[x] = 0;
    }
    dfs(t + 1, chosen, current);
  }

  std::vector<W> w_;
  std::vector<Mask> below_;
  std::vector<std::size_t> order_;
  std::size_t k_;
  std::vector<std::size_t> chain_len_;
  std::vector<W> suffix_;
  W best_{0};
  Mask best_set_ = 0;
};

AntichainWitness to_witness(const GradedPoset& poset, Mask set) {
  AntichainWitness result;
  for (; set; set &= set - 1) result.members.push_back(std::countr_zero(set));
  result.total_weight = subset_weight(poset, result.members);
  return result;
}

template <class W>
Mask run_width(const GradedPoset& poset, const std::vector<Mask>& below) {
  std::vector<Mask> comparable(poset.size(), 0);
  for (ElementId x = 0; x < poset.size(); ++x) {
    for (Mask m = below[x]; m; m &= m - 1) {
      const std::size_t y = std::countr_zero(m);
      comparable[x] |= bit(y);
      comparable[y] |= bit(x);
    }
  }
  return WidthSearch<W>(convert_weights<W>(poset), std::move(comparable)).run();
}

template <class W>
Mask run_k_width(const GradedPoset& poset, std::vector<Mask> below, std::size_t k) {
  std::vector<std::size_t> order(poset.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return poset.rank(a) < poset.rank(b);
  });
  return KWidthSearch<W>(convert_weights<W>(poset), std::move(below), std::move(order), k).run();
}

}  // namespace

std::size_t default_oracle_limit() {
  if (const char* env = std::getenv("POSETFLOW_ORACLE_LIMIT")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return kDefaultOracleLimit;
}

AntichainWitness brute_force_width(const GradedPoset& poset, std::size_t limit) {
  check_limit(poset, limit);
  const auto below = strict_down_sets(poset);
  const Mask set = fits_u64(poset) ? run_width<std::int64_t>(poset, below)
                                   : run_width<BigInt>(poset, below);
  return to_witness(poset, set);
}

AntichainWitness brute_force_k_width(const GradedPoset& poset, std::size_t k,
                                     std::size_t limit) {
  check_limit(poset, limit);
  if (k == 0) return {};
  auto below = strict_down_sets(poset);
  const Mask set = fits_u64(poset) ? run_k_width<std::int64_t>(poset, std::move(below), k)
                                   : run_k_width<BigInt>(poset, std::move(below), k);
  return to_witness(poset, set);
}

VertexCutWitness brute_force_min_vertex_cut(const Network& network, std::size_t limit) {
  const std::size_t n = network.size();
  if (n > std::min<std::size_t>(limit, 24)) {
    throw Error(ErrorCode::TooLargeForOracle, std::to_string(n) +
                                                  " vertices exceed the min-cut oracle bound");
  }
  for (VertexId v = 0; v < n; ++v) {
    if (network.is_isolated(v)) {
      throw Error(ErrorCode::InvalidInput, "vertex " + std::to_string(v) + " is isolated");
    }
  }
  std::vector<std::int64_t> caps;
  for (const auto& c : network.capacities()) caps.push_back(static_cast<std::int64_t>(c));

  auto blocks_all_paths = [&](std::uint32_t cut) {
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack;
    for (VertexId v = 0; v < n; ++v) {
      if (network.is_source(v) && !(cut >> v & 1U)) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      if (network.is_sink(v)) return false;
      for (VertexId h : network.successors()[v]) {
        if (!seen[h] && !(cut >> h & 1U)) {
          seen[h] = 1;
          stack.push_back(h);
        }
      }
    }
    return true;
  };

  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::uint32_t best_cut = 0;
  for (std::uint32_t cut = 0; cut < (std::uint32_t{1} << n); ++cut) {
    std::int64_t w = 0;
    for (std::uint32_t m = cut; m; m &= m - 1) w += caps[std::countr_zero(m)];
    if (w < best && blocks_all_paths(cut)) {
      best = w;
      best_cut = cut;
    }
  }
  VertexCutWitness result;
  for (std::uint32_t m = best_cut; m; m &= m - 1) result.members.push_back(std::countr_zero(m));
  result.total_weight = best;
  return result;
}

}  // namespace posetflow
