#include "posetflow/morphism.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

#include "posetflow/error.hpp"
#include "posetflow/stirling.hpp"

namespace posetflow {

std::vector<std::vector<VertexId>> FlowMorphism::fibers() const {
  std::vector<std::vector<VertexId>> out(codomain.size());
  for (VertexId v = 0; v < vertex_map.size(); ++v) {
    if (vertex_map[v] < out.size()) out[vertex_map[v]].push_back(v);
  }
  return out;
}

namespace {

void fail(AxiomResult& axiom, std::string message) {
  axiom.passed = false;
  axiom.failures.push_back(std::move(message));
}

std::string vertex_name(const Network& network, VertexId v) {
  return std::to_string(v) + " (" + network.label(v) + ")";
}

EdgeFiberFlow edge_fiber_flow(const FlowMorphism& phi,
                              const std::vector<std::vector<VertexId>>& fibers,
                              const std::vector<std::vector<std::size_t>>& preimage_edges,
                              std::size_t codomain_edge) {
  EdgeFiberFlow f;
  f.codomain_edge = phi.codomain.edges()[codomain_edge];
  f.lower_fiber = fibers[f.codomain_edge.tail];
  f.upper_fiber = fibers[f.codomain_edge.head];
  std::map<VertexId, std::size_t> lower_index;
  std::map<VertexId, std::size_t> upper_index;
  for (VertexId v : f.lower_fiber) {
    lower_index[v] = f.graph.lower_weights.size();
    f.graph.lower_weights.push_back(phi.domain.capacity(v));
  }
  for (VertexId v : f.upper_fiber) {
    upper_index[v] = f.graph.upper_weights.size();
    f.graph.upper_weights.push_back(phi.domain.capacity(v));
  }
  for (std::size_t i : preimage_edges[codomain_edge]) {
    const Edge& e = phi.domain.edges()[i];
    f.graph.edges.emplace_back(lower_index.at(e.tail), upper_index.at(e.head));
  }
  f.result = normalized_flow(f.graph);
  return f;
}

}  // namespace

MorphismReport verify_flow_morphism(const FlowMorphism& phi, unsigned jobs) {
  MorphismReport report;
  const Network& dom = phi.domain;
  const Network& cod = phi.codomain;

  bool malformed = phi.vertex_map.size() != dom.size();
  for (VertexId img : phi.vertex_map) malformed = malformed || img >= cod.size();
  if (malformed) {
    const std::string why = "vertex map is not a total map into the codomain";
    for (auto* axiom : {&report.epimorphism, &report.terminals, &report.capacity,
                        &report.normalized_fibers}) {
      fail(*axiom, why);
    }
    return report;
  }
  const auto fibers = phi.fibers();

  // Axiom 1.
  std::vector<std::vector<std::size_t>> preimage_edges(cod.edges().size());
  for (std::size_t i = 0; i < dom.edges().size(); ++i) {
    const Edge& e = dom.edges()[i];
    const VertexId a = phi.vertex_map[e.tail];
    const VertexId b = phi.vertex_map[e.head];
    if (a == b) continue;
    if (const auto idx = cod.edge_index(a, b)) {
      preimage_edges[*idx].push_back(i);
    } else {
      fail(report.epimorphism, "domain edge " + vertex_name(dom, e.tail) + " -> " +
                                   vertex_name(dom, e.head) + " maps to non-edge " +
                                   vertex_name(cod, a) + " -> " + vertex_name(cod, b));
    }
  }
  for (VertexId v = 0; v < cod.size(); ++v) {
    if (fibers[v].empty()) fail(report.epimorphism, "codomain vertex " + vertex_name(cod, v) + " has no preimage");
  }
  for (std::size_t i = 0; i < cod.edges().size(); ++i) {
    if (preimage_edges[i].empty()) {
      const Edge& e = cod.edges()[i];
      fail(report.epimorphism, "codomain edge " + vertex_name(cod, e.tail) + " -> " +
                                   vertex_name(cod, e.head) + " has no preimage");
    }
  }

  // Axiom 2.
  for (VertexId v = 0; v < dom.size(); ++v) {
    const VertexId img = phi.vertex_map[v];
    if (dom.is_source(v) != cod.is_source(img)) {
      fail(report.terminals, "source status differs: " + vertex_name(dom, v) + " -> " +
                                 vertex_name(cod, img));
    }
    if (dom.is_sink(v) != cod.is_sink(img)) {
      fail(report.terminals, "sink status differs: " + vertex_name(dom, v) + " -> " +
                                 vertex_name(cod, img));
    }
  }

  // Axiom 3.
  for (VertexId v = 0; v < cod.size(); ++v) {
    BigInt sum = 0;
    for (VertexId u : fibers[v]) sum += dom.capacity(u);
    if (sum != cod.capacity(v)) {
      fail(report.capacity, "fiber of " + vertex_name(cod, v) + " weighs " + sum.str() +
                                " but capacity is " + cod.capacity(v).str());
    }
  }

  // Axiom 4.
  const std::size_t count = cod.edges().size();
  report.fiber_flows.resize(count);
  const unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned t) {
    try {
      for (std::size_t i = next++; i < count; i = next++) {
        report.fiber_flows[i] = edge_fiber_flow(phi, fibers, preimage_edges, i);
      }
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < workers; ++t) threads.emplace_back(work, t);
    for (auto& th : threads) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (const auto& f : report.fiber_flows) {
    if (!f.result.feasible) {
      fail(report.normalized_fibers, "preimage of edge " +
                                         vertex_name(cod, f.codomain_edge.tail) + " -> " +
                                         vertex_name(cod, f.codomain_edge.head) +
                                         " has no normalized flow");
    }
  }
  return report;
}

TwoChainCollapse collapse_to_two_chain(std::size_t n) {
  if (n < 1 || n > kMaxTwoChainN) {
    throw Error(ErrorCode::SizeLimit, "two-chain collapse needs 1 <= n <= " +
                                          std::to_string(kMaxTwoChainN) + ", got " +
                                          std::to_string(n));
  }
  TwoChainCollapse c;
  c.n = n;
  c.domain_poset = symmetric_group_refinement(n + 1);
  const auto s = stirling_row(StirlingKind::First, n);

  std::vector<BigInt> caps;
  std::vector<std::string> labels;
  c.left.assign(n + 1, 0);
  c.right.assign(n + 2, 0);
  for (std::size_t k = 1; k <= n + 1; ++k) {
    if (k <= n) {
      c.left[k] = caps.size();
      caps.push_back(BigInt(n) * s[k]);
      labels.push_back("left_" + std::to_string(k));
    }
    if (k >= 2) {
      c.right[k] = caps.size();
      caps.push_back(s[k - 1]);
      labels.push_back("right_" + std::to_string(k));
    }
  }
  std::vector<Edge> edges;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k + 1 <= n) edges.push_back({c.left[k], c.left[k + 1]});
    if (k >= 2) edges.push_back({c.right[k], c.right[k + 1]});
    edges.push_back({c.left[k], c.right[k + 1]});
  }

  c.morphism.domain = hasse_network(c.domain_poset.poset);
  c.morphism.codomain = Network(std::move(caps), std::move(edges), std::move(labels));
  const int top = static_cast<int>(n + 1);
  for (const Permutation& pi : c.domain_poset.permutations) {
    const std::size_t cycles = pi.cycle_count();
    c.morphism.vertex_map.push_back(pi(top) == top ? c.right[cycles] : c.left[cycles]);
  }
  return c;
}

FlowMorphism collapse_to_chain(const GradedPoset& poset) {
  FlowMorphism phi;
  phi.domain = hasse_network(poset);
  std::vector<BigInt> caps = level_weights(poset);
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < caps.size(); ++r) {
    labels.push_back("rank_" + std::to_string(r));
    if (r + 1 < caps.size()) edges.push_back({r, r + 1});
  }
  phi.codomain = Network(std::move(caps), std::move(edges), std::move(labels));
  phi.vertex_map = poset.ranks();
  return phi;
}

FlowMorphism compose(const FlowMorphism& phi, const FlowMorphism& psi) {
  if (!phi.codomain.same_structure(psi.domain)) {
    throw Error(ErrorCode::InvalidInput, "codomain of the first morphism is not the domain of the second");
  }
  FlowMorphism out;
  out.domain = phi.domain;
  out.codomain = psi.codomain;
  for (VertexId img : phi.vertex_map) out.vertex_map.push_back(psi.vertex_map.at(img));
  return out;
}

std::vector<VertexId> pull_back_antichain(const FlowMorphism& phi, const MorphismReport& report,
                                          std::span<const VertexId> antichain) {
  if (!report.passed() || phi.vertex_map.size() != phi.domain.size()) {
    throw Error(ErrorCode::MorphismUnverified, "pull-back requires a verified flow morphism");
  }
  if (!is_antichain(phi.codomain, antichain)) {
    throw Error(ErrorCode::NotAntichain, "argument is not an antichain of the codomain");
  }
  std::vector<char> wanted(phi.codomain.size(), 0);
  BigInt target = 0;
  for (VertexId v : antichain) {
    if (!wanted[v]) target += phi.codomain.capacity(v);
    wanted[v] = 1;
  }
  std::vector<VertexId> preimage;
  BigInt weight = 0;
  for (VertexId u = 0; u < phi.domain.size(); ++u) {
    if (wanted[phi.vertex_map[u]]) {
      preimage.push_back(u);
      weight += phi.domain.capacity(u);
    }
  }
  if (weight != target) {
    throw std::logic_error("pulled-back weight " + weight.str() + " differs from " + target.str());
  }
  if (!is_antichain(phi.domain, preimage)) {
    throw Error(ErrorCode::NotAntichain, "preimage is not an antichain of the domain");
  }
  return preimage;
}

FlowMorphism identity_morphism(const Network& network) {
  FlowMorphism phi{network, network, {}};
  for (VertexId v = 0; v < network.size(); ++v) phi.vertex_map.push_back(v);
  return phi;
}

}  // namespace posetflow
