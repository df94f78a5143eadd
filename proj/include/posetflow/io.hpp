#pragma once

#include <string>

#include <json.hpp>

#include "posetflow/flow.hpp"
#include "posetflow/network.hpp"
#include "posetflow/poset.hpp"

namespace posetflow {

// Poset file format:
//   { "labels": [string], "covers": [[lower, upper]], "weights": [decimal string] }
// Ranks are never stored; they are recomputed on load.
nlohmann::json poset_to_json(const GradedPoset& poset);
GradedPoset poset_from_json(const nlohmann::json& doc);

// Network file format:
//   { "capacities": [decimal string], "edges": [[tail, head]] }
// An optional "labels" array is written and read back when present.
nlohmann::json network_to_json(const Network& network);
Network network_from_json(const nlohmann::json& doc);

// [{ "edge": [tail, head], "value": "p/q" }, ...]
nlohmann::json flow_to_json(const Network& network, const FlowAssignment& flow);
FlowAssignment flow_from_json(const Network& network, const nlohmann::json& doc);

// One node per element labeled "label (rank, weight)", one edge per cover.
std::string poset_to_dot(const GradedPoset& poset, const std::string& graph_name = "poset");

nlohmann::json read_json_file(const std::string& path);

}  // namespace posetflow
