#include <doctest.h>

#include "helpers.hpp"
#include "posetflow/families.hpp"
#include "posetflow/flow.hpp"
#include "posetflow/oracles.hpp"
#include "posetflow/selftest.hpp"

using namespace posetflow;

namespace {

Network single_edge(long long cs = 1, long long ct = 1) { return Network(bigs({cs, ct}), {{0, 1}}); }

Network path3(long long a, long long b, long long c) {
  return Network(bigs({a, b, c}), {{0, 1}, {1, 2}});
}

FlowAssignment flow_of(std::initializer_list<Rational> values) { return {std::vector<Rational>(values)}; }

}  // namespace

TEST_CASE("network structure") {
  const Network n(bigs({1, 2, 3, 4}), {{2, 3}, {0, 1}, {1, 2}, {0, 1}});
  CHECK(n.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(n.sources() == std::vector<VertexId>{0});
  CHECK(n.sinks() == std::vector<VertexId>{3});
  CHECK(n.is_intermediate(1));
  CHECK(n.edge_index(1, 2) == 1);
  CHECK_FALSE(n.edge_index(0, 2));
  CHECK(n.label(2) == "2");
  CHECK(n.total_capacity() == 10);

  CHECK_ERROR_CODE(Network(bigs({1, 1}), {{0, 1}, {1, 0}}), ErrorCode::CycleDetected);
  CHECK_ERROR_CODE(Network(bigs({1, 0}), {{0, 1}}), ErrorCode::NonPositiveWeight);
  CHECK_ERROR_CODE(Network(bigs({1, 1}), {{0, 5}}), ErrorCode::UnknownElement);
  CHECK_ERROR_CODE(Network(bigs({1, 1}), {}, {"a"}), ErrorCode::SizeMismatch);
}

TEST_CASE("hasse network round trip") {
  const GradedPoset b3 = boolean_lattice(3);
  const Network n = hasse_network(b3);
  CHECK(n.size() == 8);
  CHECK(n.edges().size() == 12);
  CHECK(n.label(3) == b3.label(3));
  const GradedPoset back = network_poset(n);
  CHECK(back.covers() == b3.covers());
  CHECK(back.ranks() == b3.ranks());
  // A skip edge cannot be read as a graded cover relation.
  CHECK_ERROR_CODE(network_poset(Network(bigs({1, 1, 1}), {{0, 1}, {1, 2}, {0, 2}})),
                   ErrorCode::NotGraded);
}

TEST_CASE("classify_flow") {
  const Network e = single_edge();
  CHECK(classify_flow(e, flow_of({0})).kind == FlowKind::Underflow);
  CHECK(classify_flow(e, flow_of({1})).kind == FlowKind::Both);
  CHECK(classify_flow(e, flow_of({2})).kind == FlowKind::Overflow);

  const FlowClassification bad = classify_flow(path3(10, 10, 10), flow_of({2, 1}));
  CHECK(bad.kind == FlowKind::Neither);
  CHECK_FALSE(bad.underflow_violations.empty());

  CHECK_ERROR_CODE(classify_flow(e, flow_of({1, 1})), ErrorCode::EdgeMismatch);
  CHECK(to_string(FlowKind::Overflow) == "overflow");
}

TEST_CASE("net_flow") {
  CHECK(net_flow(single_edge(), flow_of({0})) == 0);
  CHECK(net_flow(single_edge(), flow_of({1})) == 1);
  const Network parallel(bigs({1, 1, 1, 1}), {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(net_flow(parallel, flow_of({1, 1, 1, 1})) == 2);
  CHECK(net_flow(parallel, flow_of({Rational(1, 2), 0, Rational(1, 2), 0})) == Rational(1, 2));
  CHECK_ERROR_CODE(net_flow(path3(1, 1, 1), flow_of({2, 1})), ErrorCode::ConservationViolated);
}

TEST_CASE("max_flow examples") {
  const MaxFlowResult e = max_flow(single_edge());
  CHECK(e.value == 1);
  CHECK(e.cut == std::vector<VertexId>{0});

  // Every path runs through the unit-capacity bottom and top.
  const MaxFlowResult b2 = max_flow(hasse_network(boolean_lattice(2)));
  CHECK(b2.value == 1);
  CHECK(b2.cut == std::vector<VertexId>{0});
  const Network diamond(bigs({2, 1, 1, 2}), {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(max_flow(diamond).value == 2);
  // Ties resolve to the cut nearest the sources.
  CHECK(max_flow(diamond).cut == std::vector<VertexId>{0});

  const MaxFlowResult bottleneck = max_flow(path3(10, 5, 10));
  CHECK(bottleneck.value == 5);
  CHECK(bottleneck.cut == std::vector<VertexId>{1});
  CHECK(net_flow(path3(10, 5, 10), bottleneck.flow) == 5);

  CHECK_ERROR_CODE(max_flow(Network()), ErrorCode::NoSourceOrSink);
  CHECK_ERROR_CODE(max_flow(Network(bigs({1, 1, 1}), {{0, 1}})), ErrorCode::InvalidInput);
}

TEST_CASE("max_flow handles capacities beyond 64 bits") {
  const BigInt huge = big("123456789012345678901234567890");
  const Network n({huge, huge + 1, huge * 2}, {{0, 2}, {1, 2}});
  CHECK(max_flow(n).value == huge * 2);
  CHECK(min_flow(n).value == huge * 2 + 1);
}

TEST_CASE("min_flow examples") {
  const MinFlowResult c = min_flow(path3(1, 1, 1));
  CHECK(c.value == 1);
  CHECK(c.antichain.size() == 1);

  const MinFlowResult b2 = min_flow(hasse_network(boolean_lattice(2)));
  CHECK(b2.value == 2);
  CHECK(b2.antichain == std::vector<VertexId>{1, 2});

  // Two-chain quotient for n = 3 at ranks 2, 3: left_2 (9), right_2 (2), left_3 (3), right_3 (3).
  const Network q(bigs({9, 2, 3, 3}), {{0, 2}, {1, 3}, {0, 3}});
  const MinFlowResult r = min_flow(q);
  CHECK(r.value == 11);
  CHECK(r.antichain == std::vector<VertexId>{0, 1});
  CHECK(brute_force_width(network_poset(q)).total_weight == 11);

  CHECK_ERROR_CODE(min_flow(Network()), ErrorCode::NoSourceOrSink);
  CHECK_ERROR_CODE(min_flow(Network(bigs({1, 1, 1}), {{0, 1}})), ErrorCode::UnsatisfiableLowerBound);
}

TEST_CASE("flow witnesses classify as expected") {
  Rng rng(7);
  for (int t = 0; t < 60; ++t) {
    const Network n = random_network(rng, 10);
    const MaxFlowResult mx = max_flow(n);
    const MinFlowResult mn = min_flow(n);
    const FlowKind kmax = classify_flow(n, mx.flow).kind;
    const FlowKind kmin = classify_flow(n, mn.flow).kind;
    CHECK((kmax == FlowKind::Underflow || kmax == FlowKind::Both));
    CHECK((kmin == FlowKind::Overflow || kmin == FlowKind::Both));
    CHECK(net_flow(n, mx.flow) == Rational(mx.value));
    CHECK(net_flow(n, mn.flow) == Rational(mn.value));
    CHECK(is_antichain(n, mn.antichain));
    BigInt w = 0;
    for (VertexId v : mn.antichain) w += n.capacity(v);
    CHECK(w == mn.value);
    CHECK(mn.value >= mx.value);
  }
}

TEST_CASE("max_flow agrees with the exhaustive vertex cut") {
  const SuiteResult r = suite_max_flow_cut(11, 100);
  CHECK_MESSAGE(r.passed(), r.first_failure);
  const Network e = single_edge();
  CHECK(brute_force_min_vertex_cut(e).total_weight == 1);
  CHECK(brute_force_min_vertex_cut(path3(10, 5, 10)).members == std::vector<VertexId>{1});
  CHECK_ERROR_CODE(brute_force_min_vertex_cut(Network(bigs({1, 1, 1}), {{0, 1}})), ErrorCode::InvalidInput);
}

TEST_CASE("min_flow agrees with the antichain oracle on Hasse networks") {
  Rng rng(3);
  int checked = 0;
  for (int t = 0; t < 150; ++t) {
    const GradedPoset p = random_graded_poset(rng, 15);
    bool has_isolated = false;
    for (ElementId x = 0; x < p.size(); ++x) {
      if (p.upper_covers(x).empty() && p.lower_covers(x).empty()) has_isolated = true;
    }
    if (has_isolated) continue;
    ++checked;
    CHECK(min_flow(hasse_network(p)).value == brute_force_width(p).total_weight);
  }
  CHECK(checked > 50);
}
