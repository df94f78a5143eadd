// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "posetflow/error.hpp"
#include "posetflow/families.hpp"
#include "posetflow/flow.hpp"
#include "posetflow/morphism.hpp"
#include "posetflow/normalized.hpp"
#include "posetflow/oracles.hpp"
#include "posetflow/selftest.hpp"
#include "posetflow/sperner.hpp"
#include "posetflow/stirling.hpp"

using namespace posetflow;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr std::size_t kTrials = 200;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string join(const std::vector<BigInt>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += to_string(values[i]);
  }
  return out + "]";
}

BigInt max_of(const std::vector<BigInt>& values) {
  return *std::max_element(values.begin(), values.end());
}

Outcome s4_levels() {
  Outcome out;
  const auto s4 = symmetric_group_refinement(4);
  const auto lw = level_weights(s4.poset);
  if (lw != std::vector<BigInt>{6, 11, 6, 1}) out.fail("S_4 level weights " + join(lw));
  const auto dec = decompose_copies(4);
  std::vector<std::size_t> copy_sizes(5, 0);
  for (std::size_t c : dec.copy_of) ++copy_sizes.at(c);
  for (std::size_t c = 1; c <= 3; ++c) {
    if (copy_sizes[c] != 6) out.fail("copy " + std::to_string(c) + " has " +
                                     std::to_string(copy_sizes[c]) + " elements");
  }
  if (copy_sizes[4] != 6) out.fail("raised copy has " + std::to_string(copy_sizes[4]) + " elements");
  if (out.pass) out.detail = "levels [6,11,6,1], copies 6/6/6 + raised 6";
  return out;
}

Outcome symmetric_width() {
  Outcome out;
  std::string widths;
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto sn = symmetric_group_refinement(n);
    const AntichainWitness w = width(sn.poset);
    const BigInt expected = max_of(stirling_row(StirlingKind::First, n));
    if (w.total_weight != expected) {
      out.fail("n=" + std::to_string(n) + ": width " + to_string(w.total_weight) + " vs " +
               to_string(expected));
    }
    if (!is_antichain(sn.poset, w.members)) out.fail("witness for n=" + std::to_string(n) + " not an antichain");
    widths += (widths.empty() ? "" : ",") + to_string(w.total_weight);
  }
  if (out.pass) out.detail = "widths n=2..7: " + widths;
  return out;
}

Outcome nfp_symmetric() {
  Outcome out;
  std::size_t pairs = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto report = check_nfp(symmetric_group_refinement(n).poset);
    for (const auto& pair : report.pairs) {
      ++pairs;
      if (!pair.feasible) out.fail("S_" + std::to_string(n) + " rank pair " + std::to_string(pair.rank));
    }
  }
  if (out.pass) out.detail = std::to_string(pairs) + " rank pairs feasible";
  return out;
}

Outcome sperner_boolean() {
  Outcome out;
  for (unsigned n = 0; n <= 12; ++n) {
    const BigInt w = width(boolean_lattice(n)).total_weight;
    if (w != binomial(n, n / 2)) {
      out.fail("n=" + std::to_string(n) + ": width " + to_string(w));
    }
  }
  if (out.pass) out.detail = "width(B_n) = C(n, n/2) for n = 0..12";
  return out;
}

Outcome report_suites(const std::vector<SuiteResult>& suites) {
  Outcome out;
  for (const auto& s : suites) {
    if (!s.passed()) out.fail(s.name + ": " + std::to_string(s.failures) + " failures; " + s.first_failure);
    if (out.pass) {
      out.detail += (out.detail.empty() ? "" : "; ") + s.name + " " + std::to_string(s.trials) + "/" +
                    std::to_string(s.trials);
      if (!s.note.empty()) out.detail += " (" + s.note + ")";
    }
  }
  return out;
}

Outcome oracle_equivalence() {
  return report_suites({suite_width_oracle(kSeed, kTrials), suite_max_flow_cut(kSeed, kTrials)});
}

Outcome nmc_duality() {
  Outcome out = report_suites({suite_nmc_duality(kSeed, kTrials)});
  // Both outcomes must actually be exercised.
  if (out.pass && (out.detail.find(" 0 feasible") != std::string::npos ||
                   out.detail.find(" 0 infeasible") != std::string::npos)) {
    out.fail("random instances did not cover both outcomes: " + out.detail);
  }
  return out;
}

Outcome morphisms() {
  Outcome out;
  for (std::size_t n = 2; n <= 4; ++n) {
    const std::string tag = "n=" + std::to_string(n) + ": ";
    const TwoChainCollapse two = collapse_to_two_chain(n);
    const MorphismReport two_report = verify_flow_morphism(two.morphism);
    if (!two_report.passed()) out.fail(tag + "two-chain collapse fails an axiom");

    const GradedPoset& whole = two.domain_poset.poset;
    const FlowMorphism to_chain = collapse_to_chain(whole);
    const MorphismReport chain_report = verify_flow_morphism(to_chain);
    if (!chain_report.passed()) out.fail(tag + "chain collapse fails an axiom");

    const FlowMorphism second = collapse_to_chain(network_poset(two.morphism.codomain));
    if (!verify_flow_morphism(second).passed()) out.fail(tag + "two-chain to chain fails an axiom");
    const FlowMorphism composed = compose(two.morphism, second);
    if (composed.vertex_map != to_chain.vertex_map ||
        !composed.codomain.same_structure(to_chain.codomain)) {
      out.fail(tag + "composition differs from the direct chain collapse");
    }
    if (!verify_flow_morphism(composed).passed()) out.fail(tag + "composition fails an axiom");

    // Heaviest chain vertex pulls back to the largest rank.
    const auto& caps = to_chain.codomain.capacities();
    const VertexId heaviest =
        static_cast<VertexId>(std::max_element(caps.begin(), caps.end()) - caps.begin());
    const std::vector<VertexId> single{heaviest};
    const auto pulled = pull_back_antichain(to_chain, chain_report, single);
    const auto lv = levels(whole);
    const auto top = std::max_element(lv.begin(), lv.end(),
                                      [](const Level& a, const Level& b) { return a.weight < b.weight; });
    if (pulled != top->members) out.fail(tag + "pulled-back antichain is not the largest rank");
    if (subset_weight(whole, pulled) != caps[heaviest]) out.fail(tag + "pulled-back weight mismatch");

    const BigInt domain_min = min_flow(two.morphism.domain).value;
    if (min_flow(two.morphism.codomain).value != domain_min ||
        min_flow(to_chain.codomain).value != domain_min) {
      out.fail(tag + "min flow not preserved");
    }
  }
  if (out.pass) out.detail = "S_3, S_4, S_5: both collapses verified, composition and pullback consistent";
  return out;
}

Outcome proof_inequalities() {
  Outcome out;
  StirlingTable first(StirlingKind::First);
  BigInt factorial = 1;
  for (std::size_t n = 0; n <= 200; ++n) {
    if (n > 0) factorial *= n;
    const auto& row = first.row(n);
    BigInt sum = 0;
    for (const auto& v : row) sum += v;
    if (sum != factorial) out.fail("row sum of n=" + std::to_string(n));
    if (n > 0) {
      for (std::size_t k = 1; k <= n; ++k) {
        if (row[k] != BigInt(n - 1) * first.at(n - 1, k) + first.at(n - 1, k - 1)) {
          out.fail("recurrence at n=" + std::to_string(n) + ", k=" + std::to_string(k));
        }
      }
    }
    if (n >= 1) {
      const auto report = proof_inequality(n);
      for (const auto& term : report.terms) {
        if (!term.ratio_holds || !term.log_concave) {
          out.fail("n=" + std::to_string(n) + ", k=" + std::to_string(term.k));
        }
      }
    }
  }
  if (out.pass) out.detail = "n = 1..200, all k";
  return out;
}

Outcome erdos() {
  Outcome out;
  const GradedPoset b4 = boolean_lattice(4);
  const std::vector<BigInt> expected{6, 10, 14, 15, 16};
  for (unsigned k = 1; k <= 5; ++k) {
    const BigInt brute = brute_force_k_width(b4, k).total_weight;
    const BigInt formula = erdos_k_width_formula(4, k);
    if (brute != expected[k - 1] || formula != expected[k - 1]) {
      out.fail("k=" + std::to_string(k) + ": brute " + to_string(brute) + ", formula " + to_string(formula));
    }
  }
  Rng rng(kSeed);
  for (std::size_t t = 0; t < kTrials; ++t) {
    const GradedPoset p = random_graded_poset(rng);
    if (brute_force_k_width(p, 1).total_weight != width(p).total_weight) {
      out.fail("k=1 width disagrees on random poset " + std::to_string(t));
    }
  }
  for (const GradedPoset& p : {boolean_lattice(4), symmetric_group_refinement(4).poset,
                               partition_lattice(4), product(claw(2), claw(3))}) {
    if (brute_force_k_width(p, 1).total_weight != width(p).total_weight) {
      out.fail("k=1 width disagrees on a family instance");
    }
  }
  if (out.pass) out.detail = "B_4 k-widths [6,10,14,15,16]; k=1 matches width on 204 instances";
  return out;
}

Outcome absolute_order() {
  Outcome out;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto check = check_absolute_reverse_refinement(n);
    if (!check.holds) {
      out.fail("n=" + std::to_string(n) + ": " + check.counterexample->first.to_string() + " vs " +
               check.counterexample->second.to_string());
    }
  }
  if (out.pass) out.detail = "absolute order = reversed refinement for n = 1..5";
  return out;
}

Outcome two_chain_products() {
  Outcome out;
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto row = stirling_row(StirlingKind::First, n);
    const GradedPoset factor = chain(n, std::vector<BigInt>(row.begin() + 1, row.end()));
    const GradedPoset two = chain(2, {BigInt(n), BigInt(1)});
    const GradedPoset expected = product(factor, two);
    const GradedPoset codomain = network_poset(collapse_to_two_chain(n).morphism.codomain);
    if (!find_isomorphism(expected, codomain)) out.fail("n=" + std::to_string(n) + ": no isomorphism");
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    GradedPoset p = claw(1);
    for (std::size_t m = 2; m <= n; ++m) p = product(p, claw(m));
    if (!check_nfp(p).all_feasible()) out.fail("claw product n=" + std::to_string(n) + " lacks NFP");
  }
  if (out.pass) out.detail = "isomorphic for n = 2..4; claw products n <= 5 have NFP";
  return out;
}

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "S_4 level regression", 1, s4_levels},
      {2, "width of S_n is its largest rank, n = 2..7", 120, symmetric_width},
      {3, "NFP of S_n, n = 2..6", 120, nfp_symmetric},
      {4, "width of B_n, n = 0..12", 60, sperner_boolean},
      {5, "flow/oracle equivalence", 60, oracle_equivalence},
      {6, "NMC / normalized-flow duality", 30, nmc_duality},
      {7, "flow morphism suite", 120, morphisms},
      {8, "Stirling inequalities, n <= 200", 10, proof_inequalities},
      {9, "k-width of B_4", 60, erdos},
      {10, "absolute order duality", 30, absolute_order},
      {11, "two-chain product isomorphism, claw products", 60, two_chain_products},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.pass && seconds > c.limit_seconds) {
      outcome.fail("too slow: " + outcome.detail);
    }
    all = all && outcome.pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", seconds, c.limit_seconds);
    std::cout << "criterion " << c.number << ": " << (outcome.pass ? "PASS" : "FAIL") << "  "
              << c.title << "  [" << timing << "]  " << outcome.detail << std::endl;
  }
  std::cout << (all ? "all criteria passed" : "some criteria FAILED") << std::endl;
  return all ? 0 : 1;
}
