#include "posetflow/flow.hpp"

#include <algorithm>
#include <cassert>

#include "flow_graph.hpp"
#include "posetflow/error.hpp"

namespace posetflow {

namespace {

using detail::FlowGraph;

struct Throughput {
  std::vector<Rational> in;
  std::vector<Rational> out;
};

Throughput throughput(const Network& network, const FlowAssignment& flow) {
  if (flow.values.size() != network.edges().size()) {
    throw Error(ErrorCode::EdgeMismatch, "flow has " + std::to_string(flow.values.size()) +
                                             " values for " +
                                             std::to_string(network.edges().size()) + " edges");
  }
  Throughput t{std::vector<Rational>(network.size()), std::vector<Rational>(network.size())};
  for (std::size_t i = 0; i < network.edges().size(); ++i) {
    t.out[network.edges()[i].tail] += flow.values[i];
    t.in[network.edges()[i].head] += flow.values[i];
  }
  return t;
}

std::string describe(const Network& network, VertexId v, std::string_view what) {
  return "vertex " + std::to_string(v) + " (" + network.label(v) + "): " + std::string(what);
}

void require_flow_ready(const Network& network, ErrorCode isolated_code) {
  if (network.size() == 0) throw Error(ErrorCode::NoSourceOrSink, "empty network");
  for (VertexId v = 0; v < network.size(); ++v) {
    if (network.is_isolated(v)) {
      throw Error(isolated_code, "vertex " + std::to_string(v) + " (" + network.label(v) +
                                     ") lies on no source-to-sink path");
    }
  }
}

// Node layout of the split network: v_in = 2v, v_out = 2v + 1, then the super
// source and super sink.
struct SplitLayout {
  std::size_t n;
  std::size_t in(VertexId v) const { return 2 * v; }
  std::size_t out(VertexId v) const { return 2 * v + 1; }
  std::size_t source() const { return 2 * n; }
  std::size_t sink() const { return 2 * n + 1; }
  std::size_t nodes() const { return 2 * n + 2; }
};

template <class Cap>
MaxFlowResult max_flow_impl(const Network& network) {
  const SplitLayout L{network.size()};
  const Cap inf = detail::to_cap<Cap>(network.total_capacity() + 1);
  FlowGraph<Cap> g(L.nodes());
  std::vector<std::size_t> vertex_arc(network.size());
  std::vector<std::size_t> edge_arc(network.edges().size());
  for (VertexId v = 0; v < network.size(); ++v) {
    vertex_arc[v] = g.add_arc(L.in(v), L.out(v), detail::to_cap<Cap>(network.capacity(v)));
  }
  for (std::size_t i = 0; i < network.edges().size(); ++i) {
    const Edge& e = network.edges()[i];
    edge_arc[i] = g.add_arc(L.out(e.tail), L.in(e.head), inf);
  }
  for (VertexId v = 0; v < network.size(); ++v) {
    if (network.is_source(v)) g.add_arc(L.source(), L.in(v), inf);
    if (network.is_sink(v)) g.add_arc(L.out(v), L.sink(), inf);
  }

  MaxFlowResult result;
  result.value = detail::to_big(g.max_flow(L.source(), L.sink()));
  for (std::size_t i = 0; i < edge_arc.size(); ++i) {
    result.flow.values.emplace_back(detail::to_big(g.pushed(edge_arc[i])));
  }
  const auto reach = g.reachable(L.source());
  BigInt cut_weight = 0;
  for (VertexId v = 0; v < network.size(); ++v) {
    if (reach[L.in(v)] && !reach[L.out(v)]) {
      result.cut.push_back(v);
      cut_weight += network.capacity(v);
    }
  }
  if (cut_weight != result.value) {
    throw std::logic_error("max flow " + result.value.str() + " differs from cut weight " +
                           cut_weight.str());
  }
  return result;
}

// Lower bound capacity(v) on each split arc, no upper bound (represented by
// total capacity + 1, which no minimum flow exceeds).
template <class Cap>
MinFlowResult min_flow_impl(const Network& network) {
  const std::size_t n = network.size();
  const Cap inf = detail::to_cap<Cap>(network.total_capacity() + 1);
  std::vector<Cap> lower(n);
  for (VertexId v = 0; v < n; ++v) lower[v] = detail::to_cap<Cap>(network.capacity(v));

  // Feasible overflow: for each vertex still below its bound, route the
  // deficit along one source-to-sink path through it. Backwards the path
  // follows the first in-edge; forwards it prefers the successor with the
  // largest remaining deficit.
  std::vector<Cap> through(n, Cap(0));
  std::vector<Cap> edge_flow(network.edges().size(), Cap(0));
  for (VertexId v : network.topological_order()) {
    if (through[v] >= lower[v]) continue;
    const Cap deficit = lower[v] - through[v];
    through[v] += deficit;
    for (VertexId u = v; !network.is_source(u);) {
      const std::size_t e = network.in_edges(u).front();
      edge_flow[e] += deficit;
      u = network.edges()[e].tail;
      through[u] += deficit;
    }
    for (VertexId u = v; !network.is_sink(u);) {
      std::size_t chosen = network.out_edges(u).front();
      Cap best = lower[network.edges()[chosen].head] - through[network.edges()[chosen].head];
      for (std::size_t e : network.out_edges(u)) {
        const VertexId h = network.edges()[e].head;
        const Cap need = lower[h] - through[h];
        if (need > best) {
          best = need;
          chosen = e;
        }
      }
      edge_flow[chosen] += deficit;
      u = network.edges()[chosen].head;
      through[u] += deficit;
    }
  }
  Cap initial(0);
  for (VertexId v = 0; v < n; ++v) {
    if (network.is_source(v)) initial += through[v];
  }

  // Reduction: max flow from super sink to super source in the residual
  // network, where pushing against an arc lowers its flow toward the bound.
  const SplitLayout L{n};
  FlowGraph<Cap> g(L.nodes());
  std::vector<std::size_t> vertex_arc(n);
  std::vector<std::size_t> edge_arc(network.edges().size());
  for (VertexId v = 0; v < n; ++v) {
    vertex_arc[v] = g.add_arc(L.out(v), L.in(v), through[v] - lower[v], inf - through[v]);
  }
  for (std::size_t i = 0; i < network.edges().size(); ++i) {
    const Edge& e = network.edges()[i];
    edge_arc[i] = g.add_arc(L.in(e.head), L.out(e.tail), edge_flow[i], inf - edge_flow[i]);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (network.is_source(v)) g.add_arc(L.in(v), L.source(), through[v], inf - through[v]);
    if (network.is_sink(v)) g.add_arc(L.sink(), L.out(v), through[v], inf - through[v]);
  }
  const Cap reduced = g.max_flow(L.sink(), L.source());

  MinFlowResult result;
  result.value = detail::to_big(Cap(initial - reduced));
  for (std::size_t i = 0; i < edge_arc.size(); ++i) {
    result.flow.values.emplace_back(detail::to_big(Cap(edge_flow[i] - g.pushed(edge_arc[i]))));
  }
  // Cut: vertices whose split arc is at its lower bound and separates the
  // super sink's residual side from the rest.
  const auto reach = g.reachable(L.sink());
  BigInt weight = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (reach[L.out(v)] && !reach[L.in(v)]) {
      result.antichain.push_back(v);
      weight += network.capacity(v);
    }
  }
  if (weight != result.value) {
    throw std::logic_error("min flow " + result.value.str() + " differs from antichain weight " +
                           weight.str());
  }
  if (!is_antichain(network, result.antichain)) {
    throw std::logic_error("min flow cut is not an antichain");
  }
  return result;
}

}  // namespace

std::string_view to_string(FlowKind kind) {
  switch (kind) {
    case FlowKind::Underflow: return "underflow";
    case FlowKind::Overflow: return "overflow";
    case FlowKind::Both: return "both";
    case FlowKind::Neither: return "neither";
  }
  return "?";
}

FlowClassification classify_flow(const Network& network, const FlowAssignment& flow) {
  const Throughput t = throughput(network, flow);
  FlowClassification c;
  auto both = [&](std::string message) {
    c.underflow_violations.push_back(message);
    c.overflow_violations.push_back(std::move(message));
  };
  for (std::size_t i = 0; i < flow.values.size(); ++i) {
    if (flow.values[i] < 0) {
      const Edge& e = network.edges()[i];
      both("edge (" + std::to_string(e.tail) + ", " + std::to_string(e.head) +
           ") carries negative flow " + to_fraction_string(flow.values[i]));
    }
  }
  for (VertexId v = 0; v < network.size(); ++v) {
    const Rational cap(network.capacity(v));
    if (network.is_intermediate(v) && t.in[v] != t.out[v]) {
      both(describe(network, v,
                    "inflow " + to_fraction_string(t.in[v]) + " != outflow " +
                        to_fraction_string(t.out[v])));
      continue;
    }
    // Sources are measured by what they emit, everything else by what it receives.
    const Rational& amount = network.is_source(v) ? t.out[v] : t.in[v];
    if (amount > cap) {
      c.underflow_violations.push_back(
          describe(network, v, to_fraction_string(amount) + " exceeds capacity " + cap.str()));
    }
    if (amount < cap) {
      c.overflow_violations.push_back(
          describe(network, v, to_fraction_string(amount) + " below capacity " + cap.str()));
    }
  }
  const bool under = c.underflow_violations.empty();
  const bool over = c.overflow_violations.empty();
  c.kind = under && over ? FlowKind::Both
           : under       ? FlowKind::Underflow
           : over        ? FlowKind::Overflow
                         : FlowKind::Neither;
  return c;
}

Rational net_flow(const Network& network, const FlowAssignment& flow) {
  const Throughput t = throughput(network, flow);
  Rational emitted = 0;
  Rational absorbed = 0;
  for (VertexId v = 0; v < network.size(); ++v) {
    if (network.is_intermediate(v) && t.in[v] != t.out[v]) {
      throw Error(ErrorCode::ConservationViolated,
                  describe(network, v, "inflow " + to_fraction_string(t.in[v]) +
                                           " != outflow " + to_fraction_string(t.out[v])));
    }
    if (network.is_source(v)) emitted += t.out[v];
    if (network.is_sink(v)) absorbed += t.in[v];
  }
  if (emitted != absorbed) {
    throw Error(ErrorCode::ConservationViolated,
                "sources emit " + to_fraction_string(emitted) + " but sinks absorb " +
                    to_fraction_string(absorbed));
  }
  return emitted;
}

MaxFlowResult max_flow(const Network& network) {
  require_flow_ready(network, ErrorCode::InvalidInput);
  if (detail::fits_int64(network.total_capacity() * 4)) {
    return max_flow_impl<std::int64_t>(network);
  }
  return max_flow_impl<BigInt>(network);
}

MinFlowResult min_flow(const Network& network) {
  require_flow_ready(network, ErrorCode::UnsatisfiableLowerBound);
  if (detail::fits_int64(network.total_capacity() * 4)) {
    return min_flow_impl<std::int64_t>(network);
  }
  return min_flow_impl<BigInt>(network);
}

}  // namespace posetflow
