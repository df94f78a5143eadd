#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace posetflow {

using Adjacency = std::vector<std::vector<std::size_t>>;

// Kahn's algorithm; nullopt when the digraph has a cycle. Ties resolved by
// smallest vertex id so the order is deterministic.
std::optional<std::vector<std::size_t>> topological_order(const Adjacency& out);

// Finds some pair (u, v) of members with a directed path u -> v of length >= 1.
// One multi-source sweep decides whether such a pair exists; only on a hit is
// the specific pair located. `allowed` (optional) restricts which vertices a
// path may pass through.
std::optional<std::pair<std::size_t, std::size_t>> find_comparable_pair(
    const Adjacency& out, std::span<const std::size_t> members,
    const std::vector<char>* allowed = nullptr);

// Lazily memoized per-source descendant bitsets. Not thread-safe: give each
// thread its own instance.
class Reachability {
 public:
  explicit Reachability(const Adjacency& out);

  // True iff v is reachable from u by a path of length >= 0.
  bool reaches(std::size_t u, std::size_t v) const;

  const boost::dynamic_bitset<>& descendants(std::size_t u) const;

 private:
  const Adjacency* out_;
  mutable std::vector<std::optional<boost::dynamic_bitset<>>> memo_;
};

}  // namespace posetflow
