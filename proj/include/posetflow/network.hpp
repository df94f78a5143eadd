#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posetflow/dag.hpp"
#include "posetflow/numeric.hpp"
#include "posetflow/poset.hpp"

namespace posetflow {

using VertexId = std::size_t;

struct Edge {
  VertexId tail;
  VertexId head;

  auto operator<=>(const Edge&) const = default;
};

// Acyclic digraph with positive vertex capacities. Sources have no incoming
// edge, sinks no outgoing edge; an isolated vertex counts as both.
class Network {
 public:
  Network() = default;
  // Edges are sorted and deduplicated. Throws CycleDetected, NonPositiveWeight,
  // UnknownElement, SizeMismatch.
  Network(std::vector<BigInt> capacities, std::vector<Edge> edges,
          std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return capacities_.size(); }
  const BigInt& capacity(VertexId v) const { return capacities_.at(v); }
  const std::vector<BigInt>& capacities() const noexcept { return capacities_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  // Label for display; defaults to the vertex id.
  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  // Edge indices into edges().
  const std::vector<std::size_t>& out_edges(VertexId v) const { return out_edges_.at(v); }
  const std::vector<std::size_t>& in_edges(VertexId v) const { return in_edges_.at(v); }
  const Adjacency& successors() const noexcept { return succ_; }
  std::optional<std::size_t> edge_index(VertexId tail, VertexId head) const;

  bool is_source(VertexId v) const { return in_edges_.at(v).empty(); }
  bool is_sink(VertexId v) const { return out_edges_.at(v).empty(); }
  bool is_isolated(VertexId v) const { return is_source(v) && is_sink(v); }
  bool is_intermediate(VertexId v) const { return !is_source(v) && !is_sink(v); }
  std::vector<VertexId> sources() const;
  std::vector<VertexId> sinks() const;
  const std::vector<VertexId>& topological_order() const noexcept { return topo_; }

  BigInt total_capacity() const;

  // Capacities and edges agree (labels ignored).
  bool same_structure(const Network& other) const;

 private:
  std::vector<BigInt> capacities_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> out_edges_;
  std::vector<std::vector<std::size_t>> in_edges_;
  Adjacency succ_;
  std::vector<VertexId> topo_;
};

// Hasse diagram oriented lower -> upper with capacity = weight.
Network hasse_network(const GradedPoset& poset);

// Reads a network back as a graded poset (edges become covers). Throws
// NotGraded when that is impossible.
GradedPoset network_poset(const Network& network);

AntichainCheck is_antichain(const Network& network, std::span<const VertexId> subset);

}  // namespace posetflow
