#pragma once

// Internal arc-capacitated residual graph with a shortest-augmenting-path
// (Dinic) max-flow. Cap is std::int64_t when every capacity and flow provably
// fits, BigInt otherwise.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "posetflow/numeric.hpp"

namespace posetflow::detail {

template <class Cap>
class FlowGraph {
 public:
  explicit FlowGraph(std::size_t nodes) : adj_(nodes), level_(nodes), next_(nodes) {}

  std::size_t node_count() const noexcept { return adj_.size(); }

  // Adds tail -> head with residual capacity `cap` and the paired reverse arc
  // with residual capacity `reverse_cap`. Returns the forward arc index; the
  // reverse arc is index ^ 1.
  std::size_t add_arc(std::size_t tail, std::size_t head, Cap cap, Cap reverse_cap = Cap(0)) {
    const std::size_t id = arcs_.size();
    arcs_.push_back({head, cap, cap});
    arcs_.push_back({tail, reverse_cap, reverse_cap});
    adj_[tail].push_back(id);
    adj_[head].push_back(id + 1);
    return id;
  }

  const Cap& residual(std::size_t arc) const { return arcs_[arc].residual; }
  // Net amount pushed along `arc` since construction (may be negative).
  Cap pushed(std::size_t arc) const { return arcs_[arc].initial - arcs_[arc].residual; }

  Cap max_flow(std::size_t source, std::size_t sink) {
    Cap total(0);
    while (build_levels(source, sink)) {
      next_.assign(adj_.size(), 0);
      while (true) {
        Cap pushed_now = augment(source, sink, Cap(-1));
        if (pushed_now == Cap(0)) break;
        total += pushed_now;
      }
    }
    return total;
  }

  // Nodes reachable from `from` through arcs with positive residual capacity.
  std::vector<char> reachable(std::size_t from) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<std::size_t> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t a : adj_[u]) {
        const std::size_t v = arcs_[a].head;
        if (!seen[v] && arcs_[a].residual > Cap(0)) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::size_t head;
    Cap residual;
    Cap initial;
  };

  bool build_levels(std::size_t source, std::size_t sink) {
    level_.assign(adj_.size(), -1);
    std::queue<std::size_t> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t a : adj_[u]) {
        const std::size_t v = arcs_[a].head;
        if (level_[v] < 0 && arcs_[a].residual > Cap(0)) {
          level_[v] = level_[u] + 1;
          queue.push(v);
        }
      }
    }
    return level_[sink] >= 0;
  }

  // `limit` < 0 stands for "unbounded". Returns the amount pushed.
  Cap augment(std::size_t u, std::size_t sink, const Cap& limit) {
    if (u == sink) return limit;
    for (std::size_t& i = next_[u]; i < adj_[u].size(); ++i) {
      const std::size_t a = adj_[u][i];
      Arc& arc = arcs_[a];
      if (arc.residual <= Cap(0) || level_[arc.head] != level_[u] + 1) continue;
      const Cap bound = (limit < Cap(0) || arc.residual < limit) ? arc.residual : limit;
      Cap got = augment(arc.head, sink, bound);
      if (got > Cap(0)) {
        arc.residual -= got;
        arcs_[a ^ 1].residual += got;
        return got;
      }
    }
    return Cap(0);
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

// True when values up to `bound` (with generous headroom for sums) fit in int64.
inline bool fits_int64(const BigInt& bound) {
  return bound < BigInt(std::numeric_limits<std::int64_t>::max() / 4);
}

template <class Cap>
Cap to_cap(const BigInt& value) {
  return static_cast<Cap>(value);
}

template <class Cap>
BigInt to_big(const Cap& value) {
  return BigInt(value);
}

}  // namespace posetflow::detail
