#include "posetflow/network.hpp"

#include <algorithm>

#include "posetflow/error.hpp"

namespace posetflow {

Network::Network(std::vector<BigInt> capacities, std::vector<Edge> edges,
                 std::vector<std::string> labels)
    : capacities_(std::move(capacities)), edges_(std::move(edges)), labels_(std::move(labels)) {
  const std::size_t n = capacities_.size();
  if (labels_.empty()) {
    for (std::size_t v = 0; v < n; ++v) labels_.push_back(std::to_string(v));
  }
  if (labels_.size() != n) {
    throw Error(ErrorCode::SizeMismatch, "network has " + std::to_string(n) +
                                             " capacities but " +
                                             std::to_string(labels_.size()) + " labels");
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (capacities_[v] <= 0) {
      throw Error(ErrorCode::NonPositiveWeight, "vertex " + std::to_string(v) +
                                                    " has capacity " + capacities_[v].str());
    }
  }
  for (const Edge& e : edges_) {
    if (e.tail >= n || e.head >= n) {
      throw Error(ErrorCode::UnknownElement, "edge (" + std::to_string(e.tail) + ", " +
                                                 std::to_string(e.head) + ") out of range");
    }
    if (e.tail == e.head) {
      throw Error(ErrorCode::CycleDetected, "self-loop on " + std::to_string(e.tail));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  out_edges_.assign(n, {});
  in_edges_.assign(n, {});
  succ_.assign(n, {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out_edges_[edges_[i].tail].push_back(i);
    in_edges_[edges_[i].head].push_back(i);
    succ_[edges_[i].tail].push_back(edges_[i].head);
  }
  auto order = posetflow::topological_order(succ_);
  if (!order) throw Error(ErrorCode::CycleDetected, "network digraph has a cycle");
  topo_ = std::move(*order);
}

std::optional<std::size_t> Network::edge_index(VertexId tail, VertexId head) const {
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{tail, head});
  if (it == edges_.end() || *it != Edge{tail, head}) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<VertexId> Network::sources() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < size(); ++v) {
    if (is_source(v)) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> Network::sinks() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < size(); ++v) {
    if (is_sink(v)) out.push_back(v);
  }
  return out;
}

BigInt Network::total_capacity() const {
  BigInt sum = 0;
  for (const auto& c : capacities_) sum += c;
  return sum;
}

bool Network::same_structure(const Network& other) const {
  return capacities_ == other.capacities_ && edges_ == other.edges_;
}

Network hasse_network(const GradedPoset& poset) {
  std::vector<Edge> edges;
  edges.reserve(poset.covers().size());
  for (const Cover& c : poset.covers()) edges.push_back({c.lower, c.upper});
  return Network(poset.weights(), std::move(edges), poset.labels());
}

GradedPoset network_poset(const Network& network) {
  std::vector<Cover> covers;
  covers.reserve(network.edges().size());
  for (const Edge& e : network.edges()) covers.push_back({e.tail, e.head});
  return build_poset(network.labels(), std::move(covers), network.capacities());
}

AntichainCheck is_antichain(const Network& network, std::span<const VertexId> subset) {
  for (VertexId v : subset) {
    if (v >= network.size()) {
      throw Error(ErrorCode::UnknownElement, "vertex " + std::to_string(v) + " out of range");
    }
  }
  AntichainCheck check;
  if (auto pair = find_comparable_pair(network.successors(), subset)) {
    check.is_antichain = false;
    check.violation = pair;
  }
  return check;
}

}  // namespace posetflow
