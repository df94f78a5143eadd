#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "helpers.hpp"
#include "posetflow/families.hpp"
#include "posetflow/flow.hpp"
#include "posetflow/io.hpp"

using namespace posetflow;
using nlohmann::json;

TEST_CASE("numeric helpers") {
  CHECK(to_fraction_string(Rational(3)) == "3/1");
  CHECK(to_fraction_string(Rational(-2, 4)) == "-1/2");
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(parse_bigint("-12") == -12);
  CHECK_ERROR_CODE(parse_bigint("12a"), ErrorCode::InvalidInput);
  CHECK_ERROR_CODE(parse_bigint(""), ErrorCode::InvalidInput);
  CHECK_ERROR_CODE(parse_rational("1/0"), ErrorCode::InvalidInput);
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("error messages carry the code name") {
  const Error e(ErrorCode::CycleDetected, "loop");
  CHECK(std::string(e.what()) == "CycleDetected: loop");
  CHECK(to_string(ErrorCode::UnsatisfiableLowerBound) == "UnsatisfiableLowerBound");
}

TEST_CASE("poset JSON round trip") {
  const GradedPoset p = product(claw(3), chain(2, bigs({2, 7})));
  const json doc = poset_to_json(p);
  CHECK(doc["weights"][0] == "2");
  const GradedPoset back = poset_from_json(doc);
  CHECK(back.labels() == p.labels());
  CHECK(back.covers() == p.covers());
  CHECK(back.weights() == p.weights());
  CHECK(back.ranks() == p.ranks());
}

TEST_CASE("poset JSON accepts integer weights and rejects malformed input") {
  const json ok = json::parse(R"({"labels":["a","b"],"covers":[[0,1]],"weights":[1,"2"]})");
  CHECK(poset_from_json(ok).weight(1) == 2);
  CHECK_ERROR_CODE(poset_from_json(json::parse(R"({"labels":["a"],"covers":[]})")), ErrorCode::InvalidInput);
  CHECK_ERROR_CODE(poset_from_json(json::parse(R"({"labels":["a"],"covers":[[0]],"weights":["1"]})")),
                   ErrorCode::InvalidInput);
  CHECK_ERROR_CODE(poset_from_json(json::parse(R"({"labels":["a"],"covers":[],"weights":["x"]})")),
                   ErrorCode::InvalidInput);
  CHECK_ERROR_CODE(
      poset_from_json(json::parse(R"({"labels":["a","b"],"covers":[[0,1],[1,0]],"weights":["1","1"]})")),
      ErrorCode::CycleDetected);
}

TEST_CASE("network and flow JSON round trip") {
  const Network n(bigs({3, 4, 5}), {{0, 1}, {1, 2}}, {"s", "r", "t"});
  const Network back = network_from_json(network_to_json(n));
  CHECK(back.same_structure(n));
  CHECK(back.labels() == n.labels());

  const Network unlabeled = network_from_json(json::parse(R"({"capacities":["1","2"],"edges":[[0,1]]})"));
  CHECK(unlabeled.label(1) == "1");

  const MaxFlowResult mf = max_flow(n);
  const json fj = flow_to_json(n, mf.flow);
  CHECK(fj[0]["value"] == "3/1");
  CHECK(flow_from_json(n, fj).values == mf.flow.values);

  CHECK_ERROR_CODE(flow_from_json(n, json::parse(R"([{"edge":[0,2],"value":"1"}])")), ErrorCode::EdgeMismatch);
  CHECK_ERROR_CODE(flow_from_json(n, json::parse(R"([{"edge":[0,1],"value":"1"}])")), ErrorCode::EdgeMismatch);
}

TEST_CASE("DOT export") {
  const std::string dot = poset_to_dot(symmetric_group_refinement(3).poset, "S3");
  CHECK(dot.find("digraph \"S3\"") == 0);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("(1 2 3) (0, 1)") != std::string::npos);
  CHECK(dot.find("(1)(2)(3) (2, 1)") != std::string::npos);
  std::size_t nodes = 0, edges = 0;
  for (std::size_t pos = 0; (pos = dot.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
  for (std::size_t pos = 0; (pos = dot.find(" -> ", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(nodes == 6);
  CHECK(edges == 9);
}

TEST_CASE("read_json_file") {
  const std::string path = "posetflow_io_test.json";
  {
    std::ofstream out(path);
    out << R"({"a": 1})";
  }
  CHECK(read_json_file(path)["a"] == 1);
  {
    std::ofstream out(path);
    out << "{not json";
  }
  CHECK_ERROR_CODE(read_json_file(path), ErrorCode::InvalidInput);
  std::remove(path.c_str());
  CHECK_ERROR_CODE(read_json_file("does/not/exist.json"), ErrorCode::InvalidInput);
}
