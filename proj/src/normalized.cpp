#include "posetflow/normalized.hpp"

#include <algorithm>
#include <functional>

#include "flow_graph.hpp"
#include "posetflow/error.hpp"

namespace posetflow {

namespace {

BigInt side_weight(const std::vector<BigInt>& w) {
  BigInt sum = 0;
  for (const auto& x : w) sum += x;
  return sum;
}

void validate(const BipartiteGraph& g) {
  for (const auto* side : {&g.lower_weights, &g.upper_weights}) {
    for (const auto& w : *side) {
      if (w <= 0) throw Error(ErrorCode::NonPositiveWeight, "bipartite weight " + w.str());
    }
  }
  for (const auto& [x, y] : g.edges) {
    if (x >= g.lower_weights.size() || y >= g.upper_weights.size()) {
      throw Error(ErrorCode::NotBipartite, "edge (" + std::to_string(x) + ", " +
                                               std::to_string(y) +
                                               ") does not join the two sides");
    }
  }
}

template <class Cap>
NormalizedFlowResult solve(const BipartiteGraph& g, const BigInt& ws, const BigInt& wt) {
  const std::size_t a = g.lower_weights.size();
  const std::size_t b = g.upper_weights.size();
  const std::size_t source = a + b;
  const std::size_t sink = a + b + 1;
  const BigInt total = ws * wt;
  detail::FlowGraph<Cap> fg(a + b + 2);
  for (std::size_t x = 0; x < a; ++x) {
    fg.add_arc(source, x, detail::to_cap<Cap>(g.lower_weights[x] * wt));
  }
  std::vector<std::size_t> middle;
  middle.reserve(g.edges.size());
  for (const auto& [x, y] : g.edges) {
    middle.push_back(fg.add_arc(x, a + y, detail::to_cap<Cap>(total)));
  }
  for (std::size_t y = 0; y < b; ++y) {
    fg.add_arc(a + y, sink, detail::to_cap<Cap>(g.upper_weights[y] * ws));
  }
  const BigInt value = detail::to_big(fg.max_flow(source, sink));

  NormalizedFlowResult result;
  result.feasible = value == total;
  if (result.feasible) {
    for (std::size_t arc : middle) {
      result.flow.emplace_back(detail::to_big(fg.pushed(arc)), total);
    }
  } else {
    const auto reach = fg.reachable(source);
    for (std::size_t x = 0; x < a; ++x) {
      if (reach[x]) result.violating_set.push_back(x);
    }
  }
  return result;
}

}  // namespace

NormalizedFlowResult normalized_flow(const BipartiteGraph& graph) {
  validate(graph);
  const BigInt ws = side_weight(graph.lower_weights);
  const BigInt wt = side_weight(graph.upper_weights);
  if (graph.lower_weights.empty() || graph.upper_weights.empty()) {
    // Nothing to route; feasible only when both sides are empty.
    NormalizedFlowResult r;
    r.feasible = graph.lower_weights.empty() && graph.upper_weights.empty();
    for (std::size_t x = 0; x < graph.lower_weights.size(); ++x) r.violating_set.push_back(x);
    return r;
  }
  // Middle capacities equal the total, so sums stay below (|E| + 2) * total.
  const BigInt bound = ws * wt * BigInt(graph.edges.size() + 2);
  if (detail::fits_int64(bound)) return solve<std::int64_t>(graph, ws, wt);
  return solve<BigInt>(graph, ws, wt);
}

BipartiteGraph bipartite_view(const Network& network, std::vector<VertexId>* lower_ids,
                              std::vector<VertexId>* upper_ids) {
  std::vector<std::size_t> index(network.size());
  std::vector<VertexId> lower;
  std::vector<VertexId> upper;
  BipartiteGraph g;
  for (VertexId v = 0; v < network.size(); ++v) {
    if (network.is_intermediate(v)) {
      throw Error(ErrorCode::NotBipartite,
                  "vertex " + std::to_string(v) + " has both in- and out-edges");
    }
    if (network.is_source(v)) {
      index[v] = lower.size();
      lower.push_back(v);
      g.lower_weights.push_back(network.capacity(v));
    } else {
      index[v] = upper.size();
      upper.push_back(v);
      g.upper_weights.push_back(network.capacity(v));
    }
  }
  for (const Edge& e : network.edges()) g.edges.emplace_back(index[e.tail], index[e.head]);
  if (lower_ids) *lower_ids = std::move(lower);
  if (upper_ids) *upper_ids = std::move(upper);
  return g;
}

NormalizedFlowResult normalized_flow(const Network& network) {
  return normalized_flow(bipartite_view(network));
}

NmcResult nmc_bruteforce(const BipartiteGraph& graph, std::size_t limit) {
  validate(graph);
  const std::size_t a = graph.lower_weights.size();
  if (a > std::min<std::size_t>(limit, 62)) {
    throw Error(ErrorCode::TooLargeForOracle, "lower side of " + std::to_string(a) +
                                                  " vertices exceeds the NMC oracle bound");
  }
  const BigInt ws = side_weight(graph.lower_weights);
  const BigInt wt = side_weight(graph.upper_weights);
  std::vector<std::vector<std::size_t>> nbrs(a);
  for (const auto& [x, y] : graph.edges) nbrs[x].push_back(y);

  std::vector<std::size_t> hits(graph.upper_weights.size(), 0);
  std::vector<std::size_t> chosen;
  BigInt wx = 0;
  BigInt wd = 0;
  NmcResult result;

  // Preorder over sorted index sequences is lexicographic order.
  std::function<bool(std::size_t)> visit = [&](std::size_t start) {
    for (std::size_t x = start; x < a; ++x) {
      chosen.push_back(x);
      wx += graph.lower_weights[x];
      for (std::size_t y : nbrs[x]) {
        if (hits[y]++ == 0) wd += graph.upper_weights[y];
      }
      if (wx * wt > wd * ws) {
        result.holds = false;
        result.counterexample = chosen;
        return true;
      }
      if (visit(x + 1)) return true;
      for (std::size_t y : nbrs[x]) {
        if (--hits[y] == 0) wd -= graph.upper_weights[y];
      }
      wx -= graph.lower_weights[x];
      chosen.pop_back();
    }
    return false;
  };
  visit(0);
  return result;
}

bool is_normalized_flow(const BipartiteGraph& graph, const std::vector<Rational>& flow) {
  if (flow.size() != graph.edges.size()) return false;
  const BigInt ws = side_weight(graph.lower_weights);
  const BigInt wt = side_weight(graph.upper_weights);
  std::vector<Rational> out(graph.lower_weights.size());
  std::vector<Rational> in(graph.upper_weights.size());
  for (std::size_t i = 0; i < flow.size(); ++i) {
    if (flow[i] < 0) return false;
    out[graph.edges[i].first] += flow[i];
    in[graph.edges[i].second] += flow[i];
  }
  for (std::size_t x = 0; x < out.size(); ++x) {
    if (out[x] != Rational(graph.lower_weights[x], ws)) return false;
  }
  for (std::size_t y = 0; y < in.size(); ++y) {
    if (in[y] != Rational(graph.upper_weights[y], wt)) return false;
  }
  return true;
}

}  // namespace posetflow
