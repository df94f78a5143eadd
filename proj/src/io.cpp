#include "posetflow/io.hpp"

#include <fstream>
#include <sstream>

#include "posetflow/error.hpp"

namespace posetflow {

namespace {

using nlohmann::json;

const json& require(const json& doc, const char* key, json::value_t type) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorCode::InvalidInput, std::string("missing field '") + key + "'");
  }
  const json& value = doc.at(key);
  if (value.type() != type) {
    throw Error(ErrorCode::InvalidInput, std::string("field '") + key + "' has the wrong type");
  }
  return value;
}

BigInt big_from(const json& value) {
  if (value.is_string()) return parse_bigint(value.get<std::string>());
  if (value.is_number_integer()) return BigInt(value.get<long long>());
  throw Error(ErrorCode::InvalidInput, "expected a decimal string, got " + value.dump());
}

std::pair<std::size_t, std::size_t> pair_from(const json& value) {
  if (!value.is_array() || value.size() != 2 || !value[0].is_number_integer() ||
      !value[1].is_number_integer() || value[0].get<long long>() < 0 ||
      value[1].get<long long>() < 0) {
    throw Error(ErrorCode::InvalidInput, "expected a pair of nonnegative ids, got " + value.dump());
  }
  return {value[0].get<std::size_t>(), value[1].get<std::size_t>()};
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

nlohmann::json poset_to_json(const GradedPoset& poset) {
  json doc;
  doc["labels"] = poset.labels();
  json covers = json::array();
  for (const Cover& c : poset.covers()) covers.push_back({c.lower, c.upper});
  doc["covers"] = std::move(covers);
  json weights = json::array();
  for (const auto& w : poset.weights()) weights.push_back(w.str());
  doc["weights"] = std::move(weights);
  return doc;
}

GradedPoset poset_from_json(const nlohmann::json& doc) {
  std::vector<std::string> labels;
  for (const auto& l : require(doc, "labels", json::value_t::array)) {
    if (!l.is_string()) throw Error(ErrorCode::InvalidInput, "labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  std::vector<Cover> covers;
  for (const auto& c : require(doc, "covers", json::value_t::array)) {
    const auto [lo, hi] = pair_from(c);
    covers.push_back({lo, hi});
  }
  std::vector<BigInt> weights;
  for (const auto& w : require(doc, "weights", json::value_t::array)) weights.push_back(big_from(w));
  return build_poset(std::move(labels), std::move(covers), std::move(weights));
}

nlohmann::json network_to_json(const Network& network) {
  json doc;
  json caps = json::array();
  for (const auto& c : network.capacities()) caps.push_back(c.str());
  doc["capacities"] = std::move(caps);
  json edges = json::array();
  for (const Edge& e : network.edges()) edges.push_back({e.tail, e.head});
  doc["edges"] = std::move(edges);
  doc["labels"] = network.labels();
  return doc;
}

Network network_from_json(const nlohmann::json& doc) {
  std::vector<BigInt> caps;
  for (const auto& c : require(doc, "capacities", json::value_t::array)) caps.push_back(big_from(c));
  std::vector<Edge> edges;
  for (const auto& e : require(doc, "edges", json::value_t::array)) {
    const auto [t, h] = pair_from(e);
    edges.push_back({t, h});
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    for (const auto& l : require(doc, "labels", json::value_t::array)) {
      if (!l.is_string()) throw Error(ErrorCode::InvalidInput, "labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return Network(std::move(caps), std::move(edges), std::move(labels));
}

nlohmann::json flow_to_json(const Network& network, const FlowAssignment& flow) {
  if (flow.values.size() != network.edges().size()) {
    throw Error(ErrorCode::EdgeMismatch, "flow does not match the network's edges");
  }
  json out = json::array();
  for (std::size_t i = 0; i < flow.values.size(); ++i) {
    const Edge& e = network.edges()[i];
    out.push_back({{"edge", {e.tail, e.head}}, {"value", to_fraction_string(flow.values[i])}});
  }
  return out;
}

FlowAssignment flow_from_json(const Network& network, const nlohmann::json& doc) {
  if (!doc.is_array()) throw Error(ErrorCode::InvalidInput, "flow must be an array");
  FlowAssignment flow;
  flow.values.assign(network.edges().size(), Rational(0));
  std::vector<char> seen(network.edges().size(), 0);
  for (const auto& entry : doc) {
    const auto [t, h] = pair_from(require(entry, "edge", json::value_t::array));
    const auto idx = network.edge_index(t, h);
    if (!idx || seen[*idx]) {
      throw Error(ErrorCode::EdgeMismatch, "flow names edge (" + std::to_string(t) + ", " +
                                               std::to_string(h) + ") which is not in the network or is repeated");
    }
    seen[*idx] = 1;
    const json& value = entry.at("value");
    flow.values[*idx] = value.is_string() ? parse_rational(value.get<std::string>())
                                          : Rational(big_from(value));
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) throw Error(ErrorCode::EdgeMismatch, "flow omits edge " + std::to_string(i));
  }
  return flow;
}

std::string poset_to_dot(const GradedPoset& poset, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(graph_name) << "\" {\n";
  out << "  rankdir=BT;\n";
  for (ElementId x = 0; x < poset.size(); ++x) {
    out << "  n" << x << " [label=\"" << dot_escape(poset.label(x)) << " (" << poset.rank(x)
        << ", " << poset.weight(x).str() << ")\"];\n";
  }
  for (const Cover& c : poset.covers()) out << "  n" << c.lower << " -> n" << c.upper << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, "'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace posetflow
