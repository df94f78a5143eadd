#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "posetflow/network.hpp"

namespace posetflow {

// One exact nonnegative value per network edge, aligned with Network::edges().
struct FlowAssignment {
  std::vector<Rational> values;
};

enum class FlowKind { Underflow, Overflow, Both, Neither };
std::string_view to_string(FlowKind kind);

struct FlowClassification {
  FlowKind kind = FlowKind::Neither;
  std::vector<std::string> underflow_violations;
  std::vector<std::string> overflow_violations;
};

// Throws EdgeMismatch when the assignment does not cover exactly the edges.
FlowClassification classify_flow(const Network& network, const FlowAssignment& flow);

// Total flow leaving sources. Throws ConservationViolated when an
// intermediate vertex does not conserve flow or the source and sink totals
// disagree; EdgeMismatch as above.
Rational net_flow(const Network& network, const FlowAssignment& flow);

struct MaxFlowResult {
  BigInt value;
  FlowAssignment flow;          // an underflow
  std::vector<VertexId> cut;    // minimum-weight vertex cut, ascending
};

struct MinFlowResult {
  BigInt value;
  FlowAssignment flow;             // an overflow
  std::vector<VertexId> antichain; // maximum-weight antichain, ascending
};

// Vertex-capacitated max flow via node splitting. Throws NoSourceOrSink for an
// empty network and InvalidInput when a vertex is isolated.
MaxFlowResult max_flow(const Network& network);

// Minimum overflow: every vertex must carry at least its capacity. Throws
// NoSourceOrSink for an empty network and UnsatisfiableLowerBound when a
// vertex lies on no source-to-sink path (i.e. is isolated).
MinFlowResult min_flow(const Network& network);

}  // namespace posetflow
