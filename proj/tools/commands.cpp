#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <regex>

#include <CLI11.hpp>
#include <json.hpp>

#include "posetflow/error.hpp"
#include "posetflow/families.hpp"
#include "posetflow/flow.hpp"
#include "posetflow/io.hpp"
#include "posetflow/morphism.hpp"
#include "posetflow/selftest.hpp"
#include "posetflow/sperner.hpp"
#include "posetflow/stirling.hpp"

namespace posetflow::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;

// Text reports list at most this many witness labels.
constexpr std::size_t kTextListLimit = 20;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\n");
  return s.substr(first, last - first + 1);
}

std::size_t parse_count(const std::string& text, const std::string& spec) {
  std::size_t value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::InvalidInput, "bad parameter '" + text + "' in '" + spec + "'");
  }
  return value;
}

GradedPoset parse_single(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorCode::InvalidInput, "poset spec '" + spec + "' is not of the form family:parameter");
  }
  const std::string family = spec.substr(0, colon);
  const std::string param = spec.substr(colon + 1);
  if (family == "file") return poset_from_json(read_json_file(param));
  if (family == "boolean") return boolean_lattice(parse_count(param, spec));
  if (family == "symmetric") return symmetric_group_refinement(parse_count(param, spec)).poset;
  if (family == "partition") return partition_lattice(parse_count(param, spec));
  if (family == "claw") {
    const std::size_t m = parse_count(param, spec);
    if (m == 0) throw Error(ErrorCode::InvalidInput, "claw needs m >= 1");
    return claw(m);
  }
  if (family == "chain") {
    if (param.find(',') == std::string::npos) {
      const std::size_t m = parse_count(param, spec);
      if (m == 0) throw Error(ErrorCode::InvalidInput, "chain needs m >= 1");
      return chain(m);
    }
    std::vector<BigInt> weights;
    std::size_t start = 0;
    while (start <= param.size()) {
      const auto comma = std::min(param.find(',', start), param.size());
      weights.push_back(parse_bigint(trim(param.substr(start, comma - start))));
      start = comma + 1;
    }
    const std::size_t m = weights.size();
    return chain(m, std::move(weights));
  }
  throw Error(ErrorCode::InvalidInput, "unknown poset family '" + family + "'");
}

std::vector<std::string> labels_of(const std::vector<std::string>& labels,
                                   const std::vector<std::size_t>& ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (std::size_t id : ids) out.push_back(labels.at(id));
  return out;
}

std::string join_limited(const std::vector<std::string>& items, std::size_t limit = kTextListLimit) {
  std::string out;
  for (std::size_t i = 0; i < items.size() && i < limit; ++i) {
    if (i) out += ' ';
    out += items[i];
  }
  if (items.size() > limit) out += " ... (" + std::to_string(items.size() - limit) + " more)";
  return out;
}

json big_array(const std::vector<BigInt>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

void print_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

json pair_json(const GradedPoset& poset, const RankPairResult& pair, bool with_flows) {
  json j;
  j["ranks"] = {pair.rank, pair.rank + 1};
  j["feasible"] = pair.feasible;
  if (!pair.feasible) {
    j["violating_set"] = labels_of(poset.labels(), pair.violating_set);
    j["violating_set_source"] = pair.violating_set_from_oracle ? "nmc" : "min-cut";
  } else if (with_flows) {
    json flow = json::array();
    for (std::size_t i = 0; i < pair.graph.edges.size(); ++i) {
      const auto [x, y] = pair.graph.edges[i];
      flow.push_back({{"lower", poset.label(pair.lower[x])},
                      {"upper", poset.label(pair.upper[y])},
                      {"value", to_fraction_string(pair.flow[i])}});
    }
    j["flow"] = std::move(flow);
  }
  return j;
}

json nfp_json(const GradedPoset& poset, const NfpReport& report, bool with_flows) {
  json pairs = json::array();
  for (const auto& pair : report.pairs) pairs.push_back(pair_json(poset, pair, with_flows));
  return {{"all_feasible", report.all_feasible()}, {"pairs", std::move(pairs)}};
}

void print_nfp_text(std::ostream& out, const GradedPoset& poset, const NfpReport& report) {
  std::size_t feasible = 0;
  for (const auto& pair : report.pairs) feasible += pair.feasible ? 1 : 0;
  out << "NFP: " << feasible << " of " << report.pairs.size() << " rank pairs feasible\n";
  for (const auto& pair : report.pairs) {
    if (pair.feasible) continue;
    out << "  ranks " << pair.rank << "-" << pair.rank + 1 << ": infeasible, violating set "
        << join_limited(labels_of(poset.labels(), pair.violating_set)) << " ("
        << (pair.violating_set_from_oracle ? "NMC search" : "min cut") << ")\n";
  }
}

int cmd_sperner(const std::string& spec, bool as_json, bool with_flows, unsigned jobs,
                std::ostream& out) {
  const GradedPoset poset = parse_poset_spec(spec);
  const SpernerReport report = is_sperner(poset, spec, jobs);
  if (as_json) {
    json doc;
    doc["width"] = to_string(report.width);
    doc["verdict"] = report.verdict;
    doc["max_level"] = {{"rank", report.max_level_rank},
                        {"weight", to_string(report.max_level_weight)}};
    doc["level_weights"] = big_array(report.level_weights);
    doc["witness"] = {{"weight", to_string(report.witness.total_weight)},
                      {"members", labels_of(poset.labels(), report.witness.members)}};
    doc["nfp"] = nfp_json(poset, report.nfp, with_flows);
    doc["spec"] = spec;
    doc["elements"] = poset.size();
    print_json(out, doc);
  } else {
    out << spec << ": " << poset.size() << " elements, ranks 0.." << poset.max_rank() << "\n";
    std::vector<std::string> lw;
    for (const auto& w : report.level_weights) lw.push_back(to_string(w));
    out << "level weights: " << join_limited(lw, lw.size()) << "\n";
    out << "width " << report.width << (report.verdict ? " = " : " > ") << "max level "
        << report.max_level_weight << ": " << (report.verdict ? "SPERNER" : "NOT SPERNER") << "\n";
    out << "witness: " << join_limited(labels_of(poset.labels(), report.witness.members)) << "\n";
    print_nfp_text(out, poset, report.nfp);
  }
  return report.verdict && report.nfp.all_feasible() ? kExitOk : kExitNegative;
}

int cmd_width(const std::string& spec, bool as_json, std::ostream& out) {
  const GradedPoset poset = parse_poset_spec(spec);
  const AntichainWitness w = width(poset);
  const auto members = labels_of(poset.labels(), w.members);
  if (as_json) {
    print_json(out, {{"spec", spec}, {"width", to_string(w.total_weight)}, {"witness", members}});
  } else {
    out << "width " << w.total_weight << "\n";
    out << "witness: " << join_limited(members) << "\n";
  }
  return kExitOk;
}

int cmd_nfp(const std::string& spec, bool as_json, bool with_flows, unsigned jobs, std::ostream& out) {
  const GradedPoset poset = parse_poset_spec(spec);
  const NfpReport report = check_nfp(poset, jobs);
  if (as_json) {
    json doc = {{"spec", spec}};
    doc.update(nfp_json(poset, report, with_flows));
    print_json(out, doc);
  } else {
    for (const auto& pair : report.pairs) {
      out << "ranks " << pair.rank << "-" << pair.rank + 1 << ": "
          << (pair.feasible ? "feasible" : "infeasible") << "\n";
    }
    print_nfp_text(out, poset, report);
  }
  return report.all_feasible() ? kExitOk : kExitNegative;
}

json axiom_json(const AxiomResult& a) { return {{"passed", a.passed}, {"failures", a.failures}}; }

int cmd_collapse(const std::string& spec, const std::string& stage, bool verify, unsigned jobs,
                 std::ostream& out) {
  FlowMorphism phi;
  if (stage == "two-chain") {
    static const std::regex symmetric(R"(symmetric:(\d+))");
    std::smatch m;
    const std::string s = trim(spec);
    if (!std::regex_match(s, m, symmetric)) {
      throw Error(ErrorCode::InvalidInput, "the two-chain stage needs a symmetric:n spec");
    }
    const std::size_t n = parse_count(m[1].str(), spec);
    if (n < 2) throw Error(ErrorCode::SizeLimit, "the two-chain stage needs n >= 2");
    phi = collapse_to_two_chain(n - 1).morphism;
  } else if (stage == "chain") {
    phi = collapse_to_chain(parse_poset_spec(spec));
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown stage '" + stage + "'");
  }

  json doc;
  doc["spec"] = spec;
  doc["stage"] = stage;
  doc["codomain"] = network_to_json(phi.codomain);
  json map = json::array();
  for (VertexId v = 0; v < phi.domain.size(); ++v) {
    map.push_back({phi.domain.label(v), phi.codomain.label(phi.vertex_map[v])});
  }
  doc["vertex_map"] = std::move(map);

  int status = kExitOk;
  if (verify) {
    const MorphismReport report = verify_flow_morphism(phi, jobs);
    doc["report"] = {{"passed", report.passed()},
                     {"epimorphism", axiom_json(report.epimorphism)},
                     {"terminals", axiom_json(report.terminals)},
                     {"capacity", axiom_json(report.capacity)},
                     {"normalized_fibers", axiom_json(report.normalized_fibers)}};
    if (report.passed()) {
      const MinFlowResult codomain_min = min_flow(phi.codomain);
      const auto pulled = pull_back_antichain(phi, report, codomain_min.antichain);
      doc["max_antichain"] = {{"weight", to_string(codomain_min.value)},
                              {"codomain", labels_of(phi.codomain.labels(), codomain_min.antichain)},
                              {"elements", labels_of(phi.domain.labels(), pulled)}};
    } else {
      status = kExitNegative;
    }
  }
  print_json(out, doc);
  return status;
}

int cmd_stirling(const std::string& kind_name, std::size_t n, bool as_json, std::ostream& out) {
  StirlingKind kind;
  if (kind_name == "first") {
    kind = StirlingKind::First;
  } else if (kind_name == "second") {
    kind = StirlingKind::Second;
  } else {
    throw Error(ErrorCode::InvalidInput, "kind must be 'first' or 'second'");
  }
  const auto row = stirling_row(kind, n);
  if (as_json) {
    print_json(out, big_array(row));
  } else {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k];
    out << "\n";
  }
  return kExitOk;
}

int cmd_flow(const std::string& kind, const std::string& network_spec, bool as_json, std::ostream& out) {
  const Network network = parse_network_spec(network_spec);
  BigInt value;
  FlowAssignment flow;
  std::vector<VertexId> witness;
  std::string witness_name;
  if (kind == "max") {
    MaxFlowResult r = max_flow(network);
    value = r.value;
    flow = std::move(r.flow);
    witness = std::move(r.cut);
    witness_name = "cut";
  } else if (kind == "min") {
    MinFlowResult r = min_flow(network);
    value = r.value;
    flow = std::move(r.flow);
    witness = std::move(r.antichain);
    witness_name = "antichain";
  } else {
    throw Error(ErrorCode::InvalidInput, "flow kind must be 'max' or 'min'");
  }
  const auto labels = labels_of(network.labels(), witness);
  if (as_json) {
    print_json(out, {{"kind", kind},
                     {"value", to_string(value)},
                     {witness_name, labels},
                     {"flow", flow_to_json(network, flow)}});
  } else {
    out << (kind == "max" ? "MaxFlow " : "MinFlow ") << value << "\n";
    out << witness_name << ": " << join_limited(labels) << "\n";
  }
  return kExitOk;
}

int cmd_export(const std::string& spec, const std::string& format, std::ostream& out) {
  const GradedPoset poset = parse_poset_spec(spec);
  if (format == "dot") {
    out << poset_to_dot(poset, spec);
  } else if (format == "json") {
    print_json(out, poset_to_json(poset));
  } else {
    throw Error(ErrorCode::InvalidInput, "export format must be 'dot' or 'json'");
  }
  return kExitOk;
}

int cmd_selftest(std::uint64_t seed, std::size_t trials, std::ostream& out) {
  bool all = true;
  for (const SuiteResult& r : run_property_suites(seed, trials)) {
    all = all && r.passed();
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.trials - r.failures << "/"
        << r.trials;
    if (!r.note.empty()) out << " (" << r.note << ")";
    out << "\n";
    if (!r.first_failure.empty()) out << "  first failure: " << r.first_failure << "\n";
  }
  return all ? kExitOk : kExitNegative;
}

}  // namespace

GradedPoset parse_poset_spec(const std::string& spec) {
  static const std::regex separator(R"(\s+x\s+)");
  std::vector<std::string> parts;
  const std::string text = trim(spec);
  for (std::sregex_token_iterator it(text.begin(), text.end(), separator, -1), end; it != end; ++it) {
    parts.push_back(trim(it->str()));
  }
  if (parts.empty() || std::any_of(parts.begin(), parts.end(), [](const auto& p) { return p.empty(); })) {
    throw Error(ErrorCode::InvalidInput, "empty poset spec in '" + spec + "'");
  }
  GradedPoset result = parse_single(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) result = product(result, parse_single(parts[i]));
  return result;
}

Network parse_network_spec(const std::string& spec) {
  const std::string text = trim(spec);
  if (text.rfind("hasse(", 0) == 0) {
    if (text.back() != ')') throw Error(ErrorCode::InvalidInput, "unbalanced '" + spec + "'");
    return hasse_network(parse_poset_spec(text.substr(6, text.size() - 7)));
  }
  const std::string path = text.rfind("file:", 0) == 0 ? text.substr(5) : text;
  return network_from_json(read_json_file(path));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sperner verification via exact network flows", "posetflow"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "Threads for rank-pair and fiber checks")
      ->check(CLI::Range(1u, 256u));
  app.fallthrough();

  std::string spec, kind, format, stage = "two-chain", network;
  bool as_json = false, with_flows = false, verify = false;
  std::size_t n = 0, trials = 200;
  std::uint64_t seed = 1;

  auto* sperner = app.add_subcommand("sperner", "Width, levels, verdict and NFP report");
  sperner->add_option("spec", spec, "Poset spec")->required();
  sperner->add_flag("--json", as_json, "Machine-readable output");
  sperner->add_flag("--flows", with_flows, "Include normalized flows in JSON output");

  auto* width_cmd = app.add_subcommand("width", "Maximum-weight antichain");
  width_cmd->add_option("spec", spec, "Poset spec")->required();
  width_cmd->add_flag("--json", as_json, "Machine-readable output");

  auto* nfp = app.add_subcommand("nfp", "Normalized flow on every consecutive rank pair");
  nfp->add_option("spec", spec, "Poset spec")->required();
  nfp->add_flag("--json", as_json, "Machine-readable output");
  nfp->add_flag("--flows", with_flows, "Include normalized flows in JSON output");

  auto* collapse = app.add_subcommand("collapse", "Build and check a collapsing flow morphism");
  collapse->add_option("spec", spec, "Poset spec (symmetric:n for the two-chain stage)")->required();
  collapse->add_option("--stage", stage, "two-chain or chain")
      ->check(CLI::IsMember({"two-chain", "chain"}));
  collapse->add_flag("--verify", verify, "Check the axioms and pull back a maximum antichain");

  auto* stirling = app.add_subcommand("stirling", "Row n of a Stirling triangle");
  stirling->add_option("kind", kind, "first or second")->required();
  stirling->add_option("n", n, "Row index")->required();
  stirling->add_flag("--json", as_json, "Machine-readable output");

  auto* flow = app.add_subcommand("flow", "Max flow or min flow of a network");
  flow->add_option("kind", kind, "max or min")->required();
  flow->add_option("network", network, "Network JSON path or hasse(<poset spec>)")->required();
  flow->add_flag("--json", as_json, "Machine-readable output");

  auto* export_cmd = app.add_subcommand("export", "Write a poset as DOT or JSON");
  export_cmd->add_option("spec", spec, "Poset spec")->required();
  export_cmd->add_option("format", format, "dot or json")->required();

  auto* selftest = app.add_subcommand("selftest", "Randomized oracle-equivalence suites");
  selftest->add_option("--seed", seed, "Random seed");
  selftest->add_option("--trials", trials, "Trials per suite");

  std::vector<const char*> argv{"posetflow"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  try {
    if (sperner->parsed()) return cmd_sperner(spec, as_json, with_flows, jobs, out);
    if (width_cmd->parsed()) return cmd_width(spec, as_json, out);
    if (nfp->parsed()) return cmd_nfp(spec, as_json, with_flows, jobs, out);
    if (collapse->parsed()) return cmd_collapse(spec, stage, verify, jobs, out);
    if (stirling->parsed()) return cmd_stirling(kind, n, as_json, out);
    if (flow->parsed()) return cmd_flow(kind, network, as_json, out);
    if (export_cmd->parsed()) return cmd_export(spec, format, out);
    if (selftest->parsed()) return cmd_selftest(seed, trials, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace posetflow::cli
