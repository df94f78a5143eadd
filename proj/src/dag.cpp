#include "posetflow/dag.hpp"

#include <functional>
#include <queue>

namespace posetflow {

std::optional<std::vector<std::size_t>> topological_order(const Adjacency& out) {
  const std::size_t n = out.size();
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& heads : out) {
    for (std::size_t h : heads) ++indegree[h];
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    const std::size_t v = ready.top();
    ready.pop();
    order.push_back(v);
    for (std::size_t h : out[v]) {
      if (--indegree[h] == 0) ready.push(h);
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

std::optional<std::pair<std::size_t, std::size_t>> find_comparable_pair(
    const Adjacency& out, std::span<const std::size_t> members,
    const std::vector<char>* allowed) {
  const std::size_t n = out.size();
  std::vector<char> is_member(n, 0);
  for (std::size_t m : members) is_member[m] = 1;

  auto passable = [&](std::size_t v) { return !allowed || (*allowed)[v]; };

  // Strict descendants of the whole member set.
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack;
  for (std::size_t m : members) {
    for (std::size_t h : out[m]) {
      if (!seen[h] && passable(h)) {
        seen[h] = 1;
        stack.push_back(h);
      }
    }
  }
  bool hit = false;
  while (!stack.empty() && !hit) {
    const std::size_t v = stack.back();
    stack.pop_back();
    if (is_member[v]) {
      hit = true;
      break;
    }
    for (std::size_t h : out[v]) {
      if (!seen[h] && passable(h)) {
        seen[h] = 1;
        stack.push_back(h);
      }
    }
  }
  if (!hit) return std::nullopt;

  for (std::size_t m : members) {
    std::fill(seen.begin(), seen.end(), 0);
    stack.assign(1, m);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t h : out[v]) {
        if (seen[h] || !passable(h)) continue;
        if (is_member[h]) return std::pair{m, h};
        seen[h] = 1;
        stack.push_back(h);
      }
    }
  }
  return std::nullopt;
}

Reachability::Reachability(const Adjacency& out) : out_(&out), memo_(out.size()) {}

const boost::dynamic_bitset<>& Reachability::descendants(std::size_t u) const {
  if (memo_[u]) return *memo_[u];
  boost::dynamic_bitset<> bits(out_->size());
  bits.set(u);
  for (std::size_t h : (*out_)[u]) bits |= descendants(h);
  memo_[u] = std::move(bits);
  return *memo_[u];
}

bool Reachability::reaches(std::size_t u, std::size_t v) const {
  return descendants(u).test(v);
}

}  // namespace posetflow
