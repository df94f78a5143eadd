#include "posetflow/selftest.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "posetflow/error.hpp"
#include "posetflow/flow.hpp"
#include "posetflow/oracles.hpp"
#include "posetflow/sperner.hpp"

namespace posetflow {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::string describe(const GradedPoset& poset) {
  std::ostringstream out;
  out << "poset with " << poset.size() << " elements, covers";
  for (const Cover& c : poset.covers()) out << " " << c.lower << "<" << c.upper;
  out << ", weights";
  for (const auto& w : poset.weights()) out << " " << w;
  return out.str();
}

std::string describe(const Network& network) {
  std::ostringstream out;
  out << "network with " << network.size() << " vertices, edges";
  for (const Edge& e : network.edges()) out << " " << e.tail << "->" << e.head;
  out << ", capacities";
  for (const auto& c : network.capacities()) out << " " << c;
  return out.str();
}

std::string describe(const BipartiteGraph& g) {
  std::ostringstream out;
  out << "bipartite graph, lower weights";
  for (const auto& w : g.lower_weights) out << " " << w;
  out << ", upper weights";
  for (const auto& w : g.upper_weights) out << " " << w;
  out << ", edges";
  for (const auto& [x, y] : g.edges) out << " " << x << "-" << y;
  return out.str();
}

void record_failure(SuiteResult& result, std::size_t trial, const std::string& what) {
  if (result.failures++ == 0) {
    result.first_failure = "trial " + std::to_string(trial) + ": " + what;
  }
}

// Suites get decorrelated streams from one user seed.
Rng suite_rng(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt)};
  return Rng(seq);
}

}  // namespace

GradedPoset random_graded_poset(Rng& rng, std::size_t max_elements, std::uint32_t max_weight) {
  const std::size_t n = uniform(rng, 1, std::max<std::size_t>(1, max_elements));
  const std::size_t level_count = uniform(rng, 1, std::min<std::size_t>(n, 5));
  std::vector<std::size_t> level(n);
  for (std::size_t i = 0; i < n; ++i) {
    level[i] = i < level_count ? i : uniform(rng, 0, level_count - 1);
  }
  std::vector<std::size_t> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);

  const double density = 0.15 + 0.6 * std::uniform_real_distribution<double>(0, 1)(rng);
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < n; ++i) {
    if (level[i] == 0) continue;
    std::vector<std::size_t> below;
    for (std::size_t j = 0; j < n; ++j) {
      if (level[j] + 1 == level[i]) below.push_back(j);
    }
    const std::size_t forced = below[uniform(rng, 0, below.size() - 1)];
    for (std::size_t j : below) {
      if (j == forced || coin(rng, density)) covers.push_back({ids[j], ids[i]});
    }
  }
  std::vector<std::string> labels(n);
  std::vector<BigInt> weights(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[ids[i]] = "x" + std::to_string(ids[i]);
    weights[ids[i]] = BigInt(uniform(rng, 1, max_weight));
  }
  return build_poset(std::move(labels), std::move(covers), std::move(weights));
}

Network random_network(Rng& rng, std::size_t max_vertices, std::uint32_t max_capacity) {
  const std::size_t n = uniform(rng, 2, std::max<std::size_t>(2, max_vertices));
  const double density = 0.1 + 0.5 * std::uniform_real_distribution<double>(0, 1)(rng);
  std::vector<std::size_t> position(n);
  std::iota(position.begin(), position.end(), 0);
  std::shuffle(position.begin(), position.end(), rng);

  // Orient every edge from lower to higher position, so the graph is acyclic.
  auto oriented = [&](std::size_t a, std::size_t b) {
    return position[a] < position[b] ? Edge{a, b} : Edge{b, a};
  };
  std::vector<Edge> edges;
  std::vector<char> touched(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (coin(rng, density)) {
        edges.push_back(oriented(a, b));
        touched[a] = touched[b] = 1;
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (touched[v]) continue;
    std::size_t u = uniform(rng, 0, n - 2);
    if (u >= v) ++u;
    edges.push_back(oriented(u, v));
    touched[u] = touched[v] = 1;
  }
  std::vector<BigInt> caps(n);
  for (auto& c : caps) c = BigInt(uniform(rng, 1, max_capacity));
  return Network(std::move(caps), std::move(edges));
}

BipartiteGraph random_bipartite(Rng& rng, std::size_t max_side, std::uint32_t max_weight) {
  BipartiteGraph g;
  const std::size_t a = uniform(rng, 1, max_side);
  const std::size_t b = uniform(rng, 1, max_side);
  for (std::size_t i = 0; i < a; ++i) g.lower_weights.push_back(BigInt(uniform(rng, 1, max_weight)));
  for (std::size_t j = 0; j < b; ++j) g.upper_weights.push_back(BigInt(uniform(rng, 1, max_weight)));
  // Dense graphs are mostly feasible and sparse ones mostly not.
  const double density = 0.2 + 0.8 * std::uniform_real_distribution<double>(0, 1)(rng);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      if (coin(rng, density)) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

SuiteResult suite_width_oracle(std::uint64_t seed, std::size_t trials) {
  SuiteResult result{"width vs brute-force antichain", trials, 0, {}, {}};
  Rng rng = suite_rng(seed, 1);
  for (std::size_t t = 0; t < trials; ++t) {
    const GradedPoset poset = random_graded_poset(rng);
    try {
      const AntichainWitness flow_answer = width(poset);
      const AntichainWitness oracle = brute_force_width(poset);
      if (flow_answer.total_weight != oracle.total_weight) {
        record_failure(result, t, "width " + to_string(flow_answer.total_weight) + " vs oracle " +
                                      to_string(oracle.total_weight) + " on " + describe(poset));
      } else if (!is_antichain(poset, flow_answer.members) ||
                 subset_weight(poset, flow_answer.members) != flow_answer.total_weight) {
        record_failure(result, t, "witness is not an antichain of the reported weight on " +
                                      describe(poset));
      }
    } catch (const std::exception& e) {
      record_failure(result, t, std::string(e.what()) + " on " + describe(poset));
    }
  }
  return result;
}

SuiteResult suite_max_flow_cut(std::uint64_t seed, std::size_t trials) {
  SuiteResult result{"max flow vs exhaustive vertex cut", trials, 0, {}, {}};
  Rng rng = suite_rng(seed, 2);
  for (std::size_t t = 0; t < trials; ++t) {
    const Network network = random_network(rng);
    try {
      const MaxFlowResult flow = max_flow(network);
      const VertexCutWitness oracle = brute_force_min_vertex_cut(network);
      BigInt cut_weight = 0;
      for (VertexId v : flow.cut) cut_weight += network.capacity(v);
      if (flow.value != oracle.total_weight) {
        record_failure(result, t, "max flow " + to_string(flow.value) + " vs cut " +
                                      to_string(oracle.total_weight) + " on " + describe(network));
      } else if (cut_weight != flow.value || net_flow(network, flow.flow) != Rational(flow.value)) {
        record_failure(result, t, "flow or cut witness inconsistent on " + describe(network));
      }
    } catch (const std::exception& e) {
      record_failure(result, t, std::string(e.what()) + " on " + describe(network));
    }
  }
  return result;
}

SuiteResult suite_nmc_duality(std::uint64_t seed, std::size_t trials) {
  SuiteResult result{"normalized flow vs NMC", trials, 0, {}, {}};
  Rng rng = suite_rng(seed, 3);
  std::size_t feasible = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const BipartiteGraph g = random_bipartite(rng);
    try {
      const NormalizedFlowResult flow = normalized_flow(g);
      const NmcResult nmc = nmc_bruteforce(g);
      if (flow.feasible != nmc.holds) {
        record_failure(result, t, std::string("flow says ") + (flow.feasible ? "feasible" : "infeasible") +
                                      ", NMC says " + (nmc.holds ? "holds" : "fails") + " on " +
                                      describe(g));
        continue;
      }
      if (flow.feasible) {
        ++feasible;
        if (!is_normalized_flow(g, flow.flow)) {
          record_failure(result, t, "returned flow is not normalized on " + describe(g));
        }
        continue;
      }
      // The reported set must itself violate the matching condition.
      BigInt wx = 0, wd = 0, wl = 0, wu = 0;
      std::vector<char> in_x(g.lower_weights.size(), 0), in_d(g.upper_weights.size(), 0);
      for (std::size_t x : flow.violating_set) in_x[x] = 1;
      for (const auto& [x, y] : g.edges) {
        if (in_x[x]) in_d[y] = 1;
      }
      for (std::size_t x = 0; x < in_x.size(); ++x) {
        wl += g.lower_weights[x];
        if (in_x[x]) wx += g.lower_weights[x];
      }
      for (std::size_t y = 0; y < in_d.size(); ++y) {
        wu += g.upper_weights[y];
        if (in_d[y]) wd += g.upper_weights[y];
      }
      if (flow.violating_set.empty() || wx * wu <= wd * wl) {
        record_failure(result, t, "violating set does not violate NMC on " + describe(g));
      }
    } catch (const std::exception& e) {
      record_failure(result, t, std::string(e.what()) + " on " + describe(g));
    }
  }
  result.note = std::to_string(feasible) + " feasible, " + std::to_string(trials - feasible) +
                " infeasible";
  return result;
}

std::vector<SuiteResult> run_property_suites(std::uint64_t seed, std::size_t trials) {
  return {suite_width_oracle(seed, trials), suite_max_flow_cut(seed, trials),
          suite_nmc_duality(seed, trials)};
}

}  // namespace posetflow
