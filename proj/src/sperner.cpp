#include "posetflow/sperner.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "posetflow/error.hpp"
#include "posetflow/flow.hpp"
#include "posetflow/network.hpp"
#include "posetflow/stirling.hpp"

namespace posetflow {

AntichainWitness width(const GradedPoset& poset) {
  AntichainWitness result;
  if (poset.size() == 0) return result;

  // Non-isolated elements go through one min-flow solve; the super source and
  // sink make this the sum over components.
  std::vector<ElementId> kept;
  std::vector<std::size_t> index(poset.size(), poset.size());
  for (ElementId x = 0; x < poset.size(); ++x) {
    if (poset.upper_covers(x).empty() && poset.lower_covers(x).empty()) {
      result.members.push_back(x);
      result.total_weight += poset.weight(x);
    } else {
      index[x] = kept.size();
      kept.push_back(x);
    }
  }
  if (!kept.empty()) {
    std::vector<BigInt> caps;
    for (ElementId x : kept) caps.push_back(poset.weight(x));
    std::vector<Edge> edges;
    for (const Cover& c : poset.covers()) edges.push_back({index[c.lower], index[c.upper]});
    const MinFlowResult mf = min_flow(Network(std::move(caps), std::move(edges)));
    for (VertexId v : mf.antichain) result.members.push_back(kept[v]);
    result.total_weight += mf.value;
  }
  std::sort(result.members.begin(), result.members.end());
  return result;
}

bool NfpReport::all_feasible() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const auto& p) { return p.feasible; });
}

namespace {

RankPairResult check_rank_pair(const GradedPoset& poset, const std::vector<Level>& lv,
                               std::size_t k) {
  RankPairResult r;
  r.rank = k;
  r.lower = lv[k].members;
  r.upper = lv[k + 1].members;
  std::vector<std::size_t> upper_index(poset.size(), 0);
  for (std::size_t i = 0; i < r.upper.size(); ++i) upper_index[r.upper[i]] = i;
  for (std::size_t i = 0; i < r.lower.size(); ++i) {
    const ElementId x = r.lower[i];
    r.graph.lower_weights.push_back(poset.weight(x));
    for (ElementId y : poset.upper_covers(x)) r.graph.edges.emplace_back(i, upper_index[y]);
  }
  for (ElementId y : r.upper) r.graph.upper_weights.push_back(poset.weight(y));

  NormalizedFlowResult nf = normalized_flow(r.graph);
  r.feasible = nf.feasible;
  if (nf.feasible) {
    r.flow = std::move(nf.flow);
    return r;
  }
  std::vector<std::size_t> x_set = std::move(nf.violating_set);
  if (r.lower.size() <= kNmcOracleLimit) {
    const NmcResult nmc = nmc_bruteforce(r.graph);
    if (!nmc.holds) {
      x_set = nmc.counterexample;
      r.violating_set_from_oracle = true;
    }
  }
  for (std::size_t i : x_set) r.violating_set.push_back(r.lower[i]);
  return r;
}

}  // namespace

NfpReport check_nfp(const GradedPoset& poset, unsigned jobs) {
  NfpReport report;
  if (poset.size() == 0) return report;
  const auto lv = levels(poset);
  const std::size_t pairs = lv.size() - 1;
  report.pairs.resize(pairs);
  const unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(pairs)));
  if (workers <= 1) {
    for (std::size_t k = 0; k < pairs; ++k) report.pairs[k] = check_rank_pair(poset, lv, k);
    return report;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < workers; ++t) {
    threads.emplace_back([&, t] {
      try {
        for (std::size_t k = next++; k < pairs; k = next++) {
          report.pairs[k] = check_rank_pair(poset, lv, k);
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return report;
}

SpernerReport is_sperner(const GradedPoset& poset, std::string name, unsigned jobs) {
  SpernerReport report;
  report.name = std::move(name);
  report.witness = width(poset);
  report.width = report.witness.total_weight;
  report.level_weights = level_weights(poset);
  for (std::size_t r = 0; r < report.level_weights.size(); ++r) {
    if (report.level_weights[r] > report.max_level_weight) {
      report.max_level_weight = report.level_weights[r];
      report.max_level_rank = r;
    }
  }
  report.verdict = report.width == report.max_level_weight;
  report.nfp = check_nfp(poset, jobs);
  return report;
}

BigInt erdos_k_width_formula(unsigned n, unsigned k) {
  if (k > n + 1) {
    throw Error(ErrorCode::InvalidInput, "k = " + std::to_string(k) + " exceeds n + 1 = " +
                                             std::to_string(n + 1));
  }
  std::vector<BigInt> row;
  for (unsigned i = 0; i <= n; ++i) row.push_back(binomial(n, i));
  std::sort(row.begin(), row.end(), std::greater<>());
  BigInt sum = 0;
  for (unsigned i = 0; i < k; ++i) sum += row[i];
  return sum;
}

bool ProofInequalityReport::holds() const {
  return std::all_of(terms.begin(), terms.end(),
                     [](const auto& t) { return t.ratio_holds && t.log_concave; });
}

ProofInequalityReport proof_inequality(std::size_t n) {
  ProofInequalityReport report;
  report.n = n;
  const auto row = stirling_row(StirlingKind::First, n);
  auto s = [&](std::size_t k) { return k < row.size() ? row[k] : BigInt(0); };
  const BigInt nn(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const BigInt a = s(k - 1);
    const BigInt b = s(k);
    const BigInt c = s(k + 1);
    ProofInequalityTerm t;
    t.k = k;
    t.lhs = Rational(a, a + nn * b);
    t.rhs = Rational(b, b + nn * c);
    t.ratio_holds = a * (b + nn * c) <= b * (a + nn * b);
    t.log_concave = a * c <= b * b;
    if (t.log_concave && !t.ratio_holds) {
      throw std::logic_error("log-concavity without the ratio inequality at n = " +
                             std::to_string(n) + ", k = " + std::to_string(k));
    }
    report.terms.push_back(std::move(t));
  }
  return report;
}

}  // namespace posetflow
