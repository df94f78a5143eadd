#include "posetflow/families.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "posetflow/error.hpp"

namespace posetflow {

namespace {

void check_size(std::string_view family, std::size_t n, std::size_t lo, std::size_t hi) {
  if (n < lo || n > hi) {
    throw Error(ErrorCode::SizeLimit, std::string(family) + " needs " + std::to_string(lo) +
                                          " <= n <= " + std::to_string(hi) + ", got " +
                                          std::to_string(n));
  }
}

std::string subset_label(std::size_t mask, std::size_t n) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(mask >> i & 1U)) continue;
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

// Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
std::vector<std::vector<int>> all_rgs(std::size_t n) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(n, 0);
  std::vector<int> prefix_max(n, 0);
  while (true) {
    out.push_back(a);
    // Increment the rightmost position that can still grow.
    std::size_t i = n;
    while (i-- > 1) {
      if (a[i] <= prefix_max[i - 1]) break;
    }
    if (i == 0 || i >= n) break;
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return out;
}

std::vector<int> canonical_rgs(const std::vector<int>& blocks) {
  std::vector<int> relabel(blocks.size() + 1, -1);
  std::vector<int> out(blocks.size());
  int next = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    int& r = relabel[blocks[i]];
    if (r < 0) r = next++;
    out[i] = r;
  }
  return out;
}

std::uint64_t rgs_key(const std::vector<int>& a) {
  std::uint64_t key = 0;
  for (int v : a) key = key * 16 + static_cast<std::uint64_t>(v);
  return key;
}

std::string partition_label(const std::vector<int>& a) {
  const int blocks = a.empty() ? 0 : *std::max_element(a.begin(), a.end()) + 1;
  std::string out;
  for (int b = 0; b < blocks; ++b) {
    out += '{';
    bool first = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b) continue;
      if (!first) out += ',';
      out += std::to_string(i + 1);
      first = false;
    }
    out += '}';
  }
  return out;
}

}  // namespace

GradedPoset boolean_lattice(std::size_t n) {
  check_size("boolean lattice", n, 0, kMaxBooleanN);
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::string> labels(count);
  std::vector<Cover> covers;
  covers.reserve(count * n / 2);
  for (std::size_t mask = 0; mask < count; ++mask) {
    labels[mask] = subset_label(mask, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1U)) covers.push_back({mask, mask | (std::size_t{1} << i)});
    }
  }
  return build_poset(std::move(labels), std::move(covers), std::vector<BigInt>(count, 1));
}

ElementId SymmetricGroupPoset::id_of(const Permutation& pi) const {
  if (pi.size() != n) {
    throw Error(ErrorCode::SizeMismatch, "permutation of " + std::to_string(pi.size()) +
                                             " points in S_" + std::to_string(n));
  }
  return lex_rank(pi);
}

SymmetricGroupPoset symmetric_group_refinement(std::size_t n) {
  check_size("symmetric group", n, 1, kMaxSymmetricN);
  SymmetricGroupPoset result;
  result.n = n;
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  do {
    result.permutations.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));

  std::vector<std::string> labels;
  labels.reserve(result.permutations.size());
  std::vector<Cover> covers;
  for (ElementId id = 0; id < result.permutations.size(); ++id) {
    const Permutation& pi = result.permutations[id];
    labels.push_back(pi.to_string());
    for (const auto& cycle : pi.cycles()) {
      for (std::size_t a = 0; a < cycle.size(); ++a) {
        for (std::size_t b = a + 1; b < cycle.size(); ++b) {
          // pi * (i j) swaps the images at positions i and j.
          std::vector<int> refined = pi.images();
          std::swap(refined[cycle[a] - 1], refined[cycle[b] - 1]);
          covers.push_back({id, lex_rank(Permutation(std::move(refined)))});
        }
      }
    }
  }
  result.poset = build_poset(std::move(labels), std::move(covers),
                             std::vector<BigInt>(result.permutations.size(), 1));
  return result;
}

GradedPoset partition_lattice(std::size_t n) {
  check_size("partition lattice", n, 1, kMaxPartitionN);
  const auto partitions = all_rgs(n);
  std::unordered_map<std::uint64_t, ElementId> id_of;
  for (ElementId id = 0; id < partitions.size(); ++id) id_of.emplace(rgs_key(partitions[id]), id);

  std::vector<std::string> labels;
  std::vector<Cover> covers;
  for (ElementId id = 0; id < partitions.size(); ++id) {
    const auto& a = partitions[id];
    labels.push_back(partition_label(a));
    const int blocks = *std::max_element(a.begin(), a.end()) + 1;
    for (int i = 0; i < blocks; ++i) {
      for (int j = i + 1; j < blocks; ++j) {
        std::vector<int> merged = a;
        for (int& v : merged) {
          if (v == j) v = i;
        }
        covers.push_back({id, id_of.at(rgs_key(canonical_rgs(merged)))});
      }
    }
  }
  return build_poset(std::move(labels), std::move(covers),
                     std::vector<BigInt>(partitions.size(), 1));
}

AbsoluteOrderCheck check_absolute_reverse_refinement(std::size_t n) {
  check_size("absolute order check", n, 1, kMaxAbsoluteCheckN);
  const auto sn = symmetric_group_refinement(n);
  Reachability reach(sn.poset.up_adjacency());
  const std::size_t count = sn.permutations.size();
  for (ElementId p = 0; p < count; ++p) {
    for (ElementId s = 0; s < count; ++s) {
      const bool absolute = absolute_leq(sn.permutations[p], sn.permutations[s]);
      const bool reversed_refinement = reach.reaches(s, p);
      if (absolute != reversed_refinement) {
        return {false, std::pair{sn.permutations[p], sn.permutations[s]}};
      }
    }
  }
  return {};
}

std::string_view to_string(EdgeColor color) {
  switch (color) {
    case EdgeColor::Blue: return "blue";
    case EdgeColor::Red: return "red";
    case EdgeColor::Gray: return "gray";
  }
  return "?";
}

Permutation reduce_permutation(const Permutation& pi) {
  const std::size_t m = pi.size();
  if (m < 2) throw Error(ErrorCode::SizeLimit, "reduction needs at least 2 points");
  const int top = static_cast<int>(m);
  std::vector<int> images(pi.images().begin(), pi.images().end() - 1);
  const int i = pi(top);
  if (i != top) {
    // pi'(pi^-1(n+1)) = pi(n+1)
    const int j = pi.inverse()(top);
    images[j - 1] = i;
  }
  return Permutation(std::move(images));
}

CopyDecomposition decompose_copies(std::size_t n_plus_1) {
  check_size("copy decomposition", n_plus_1, 2, kMaxCopyDecompositionN);
  CopyDecomposition d;
  d.n = n_plus_1 - 1;
  d.whole = symmetric_group_refinement(n_plus_1);
  d.part = symmetric_group_refinement(d.n);

  const int top = static_cast<int>(n_plus_1);
  for (const Permutation& pi : d.whole.permutations) {
    d.copy_of.push_back(static_cast<std::size_t>(pi(top)));
    d.reduction.push_back(d.part.id_of(reduce_permutation(pi)));
  }
  const std::size_t raised = d.raised_copy();
  for (const Cover& c : d.whole.poset.covers()) {
    const std::size_t a = d.copy_of[c.lower];
    const std::size_t b = d.copy_of[c.upper];
    if (a == b) {
      d.edge_color.push_back(EdgeColor::Blue);
    } else if (a == raised || b == raised) {
      d.edge_color.push_back(EdgeColor::Red);
    } else {
      d.edge_color.push_back(EdgeColor::Gray);
    }
  }
  return d;
}

}  // namespace posetflow
