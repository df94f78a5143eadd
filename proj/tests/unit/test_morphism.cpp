#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "posetflow/families.hpp"
#include "posetflow/flow.hpp"
#include "posetflow/morphism.hpp"
#include "posetflow/stirling.hpp"

using namespace posetflow;

TEST_CASE("identity morphism passes") {
  for (const Network& n : {hasse_network(boolean_lattice(3)), hasse_network(claw(4)),
                           Network(bigs({2, 3, 4}), {{0, 1}, {1, 2}})}) {
    const FlowMorphism id = identity_morphism(n);
    const MorphismReport r = verify_flow_morphism(id);
    CHECK(r.passed());
    const std::vector<VertexId> a{1};
    CHECK(pull_back_antichain(id, r, a) == a);
  }
}

TEST_CASE("constant map of an edge onto one vertex fails the terminal axiom") {
  const FlowMorphism phi{Network(bigs({1, 1}), {{0, 1}}), Network(bigs({2}), {}), {0, 0}};
  const MorphismReport r = verify_flow_morphism(phi);
  CHECK_FALSE(r.terminals.passed);
  CHECK_FALSE(r.passed());
}

TEST_CASE("rank collapse of B_2") {
  const FlowMorphism phi = collapse_to_chain(boolean_lattice(2));
  CHECK(phi.codomain.capacities() == bigs({1, 2, 1}));
  CHECK(phi.codomain.label(1) == "rank_1");
  CHECK(phi.vertex_map == std::vector<VertexId>{0, 1, 1, 2});
  const MorphismReport r = verify_flow_morphism(phi);
  CHECK(r.passed());
  CHECK(r.fiber_flows.size() == 2);
}

TEST_CASE("axiom failures are reported") {
  const Network path(bigs({1, 1, 1}), {{0, 1}, {1, 2}});
  SUBCASE("wrong capacity") {
    const FlowMorphism phi{path, Network(bigs({1, 2, 1}), {{0, 1}, {1, 2}}), {0, 1, 2}};
    const MorphismReport r = verify_flow_morphism(phi);
    CHECK_FALSE(r.capacity.passed);
    CHECK(r.epimorphism.passed);
  }
  SUBCASE("not onto") {
    const FlowMorphism phi{path, Network(bigs({1, 1, 1, 1}), {{0, 1}, {1, 2}, {0, 3}}), {0, 1, 2}};
    CHECK_FALSE(verify_flow_morphism(phi).epimorphism.passed);
  }
  SUBCASE("edge straddles non-adjacent images") {
    const FlowMorphism phi{path, Network(bigs({1, 1, 1}), {{0, 1}, {1, 2}}), {0, 2, 1}};
    CHECK_FALSE(verify_flow_morphism(phi).epimorphism.passed);
  }
  SUBCASE("edge fiber without normalized flow") {
    // Lower fiber {a (1), b (1)}, upper fiber {c (5), d (1)} with c above a only.
    const Network dom(bigs({1, 1, 5, 1}), {{0, 2}, {0, 3}, {1, 3}});
    const FlowMorphism phi{dom, Network(bigs({2, 6}), {{0, 1}}), {0, 0, 1, 1}};
    const MorphismReport r = verify_flow_morphism(phi);
    CHECK(r.epimorphism.passed);
    CHECK(r.capacity.passed);
    CHECK(r.terminals.passed);
    CHECK_FALSE(r.normalized_fibers.passed);
    const std::vector<VertexId> a{0};
    CHECK_ERROR_CODE(pull_back_antichain(phi, r, a), ErrorCode::MorphismUnverified);
  }
  SUBCASE("vertex map of the wrong length") {
    const FlowMorphism phi{path, path, {0, 1}};
    CHECK_FALSE(verify_flow_morphism(phi).passed());
  }
}

TEST_CASE("two-chain collapse for n = 3") {
  const TwoChainCollapse t = collapse_to_two_chain(3);
  const Network& cod = t.morphism.codomain;
  CHECK(cod.capacity(t.left[1]) == 6);
  CHECK(cod.capacity(t.left[2]) == 9);
  CHECK(cod.capacity(t.left[3]) == 3);
  CHECK(cod.capacity(t.right[2]) == 2);
  CHECK(cod.capacity(t.right[3]) == 3);
  CHECK(cod.capacity(t.right[4]) == 1);
  CHECK(cod.label(t.left[2]) == "left_2");
  CHECK(cod.label(t.right[4]) == "right_4");
  // Rank totals reproduce S_4.
  CHECK(cod.capacity(t.left[2]) + cod.capacity(t.right[2]) == 11);
  CHECK(cod.capacity(t.left[3]) + cod.capacity(t.right[3]) == 6);

  const MorphismReport r = verify_flow_morphism(t.morphism, 2);
  CHECK(r.passed());

  const std::vector<VertexId> a{t.right[2]};
  const auto pulled = pull_back_antichain(t.morphism, r, a);
  CHECK(pulled.size() == 2);
  for (VertexId v : pulled) {
    const Permutation& pi = t.domain_poset.permutations[v];
    CHECK(pi(4) == 4);
    CHECK(pi.cycle_count() == 2);
  }
}

TEST_CASE("two-chain collapse passes for n = 1..5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const TwoChainCollapse t = collapse_to_two_chain(n);
    CHECK_MESSAGE(verify_flow_morphism(t.morphism).passed(), "n = " << n);
    // Fibers at rank k add up to s(n + 1, k).
    const auto row = stirling_row(StirlingKind::First, n + 1);
    for (std::size_t k = 1; k <= n + 1; ++k) {
      BigInt total = 0;
      if (k <= n) total += t.morphism.codomain.capacity(t.left[k]);
      if (k >= 2) total += t.morphism.codomain.capacity(t.right[k]);
      CHECK(total == row[k]);
    }
  }
  CHECK_ERROR_CODE(collapse_to_two_chain(0), ErrorCode::SizeLimit);
  CHECK_ERROR_CODE(collapse_to_two_chain(7), ErrorCode::SizeLimit);
}

TEST_CASE("two-chain codomain is a product of chains") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto row = stirling_row(StirlingKind::First, n);
    const GradedPoset expected =
        product(chain(n, std::vector<BigInt>(row.begin() + 1, row.end())), chain(2, {BigInt(n), BigInt(1)}));
    CHECK(find_isomorphism(expected, network_poset(collapse_to_two_chain(n).morphism.codomain)));
  }
}

TEST_CASE("chain collapse of S_4") {
  const GradedPoset s4 = symmetric_group_refinement(4).poset;
  const FlowMorphism phi = collapse_to_chain(s4);
  CHECK(phi.codomain.capacities() == bigs({6, 11, 6, 1}));
  const MorphismReport r = verify_flow_morphism(phi);
  REQUIRE(r.passed());
  const std::vector<VertexId> a{1};
  const auto pulled = pull_back_antichain(phi, r, a);
  CHECK(pulled.size() == 11);
  CHECK(pulled == levels(s4)[1].members);

  const std::vector<VertexId> not_antichain{0, 2};
  CHECK_ERROR_CODE(pull_back_antichain(phi, r, not_antichain), ErrorCode::NotAntichain);

  CHECK(verify_flow_morphism(collapse_to_chain(chain(4))).passed());
}

TEST_CASE("composition") {
  const TwoChainCollapse t = collapse_to_two_chain(3);
  const FlowMorphism second = collapse_to_chain(network_poset(t.morphism.codomain));
  const FlowMorphism composed = compose(t.morphism, second);
  const FlowMorphism direct = collapse_to_chain(t.domain_poset.poset);
  CHECK(composed.vertex_map == direct.vertex_map);
  CHECK(composed.codomain.same_structure(direct.codomain));
  CHECK(verify_flow_morphism(composed).passed());
  CHECK_ERROR_CODE(compose(second, t.morphism), ErrorCode::InvalidInput);
}

TEST_CASE("verified morphisms preserve max and min flow") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const TwoChainCollapse t = collapse_to_two_chain(n);
    const FlowMorphism c = collapse_to_chain(t.domain_poset.poset);
    for (const FlowMorphism* phi : {&t.morphism, &c}) {
      REQUIRE(verify_flow_morphism(*phi).passed());
      CHECK(max_flow(phi->domain).value == max_flow(phi->codomain).value);
      CHECK(min_flow(phi->domain).value == min_flow(phi->codomain).value);
    }
    // The pulled-back maximum antichain of the codomain is a maximum antichain of the domain.
    const MinFlowResult cod = min_flow(t.morphism.codomain);
    const auto pulled = pull_back_antichain(t.morphism, verify_flow_morphism(t.morphism), cod.antichain);
    BigInt w = 0;
    for (VertexId v : pulled) w += t.morphism.domain.capacity(v);
    CHECK(w == min_flow(t.morphism.domain).value);
  }
}
