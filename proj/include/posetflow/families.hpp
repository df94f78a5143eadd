#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "posetflow/permutation.hpp"
#include "posetflow/poset.hpp"

namespace posetflow {

inline constexpr std::size_t kMaxBooleanN = 20;
inline constexpr std::size_t kMaxSymmetricN = 8;
inline constexpr std::size_t kMaxPartitionN = 9;
inline constexpr std::size_t kMaxAbsoluteCheckN = 6;
inline constexpr std::size_t kMaxCopyDecompositionN = 7;

// Subsets of {1..n} ordered by inclusion; element id is the subset's bitmask.
GradedPoset boolean_lattice(std::size_t n);

// S_n under refinement: pi is covered by pi * (i j) for i != j on one cycle of
// pi. Rank is (#cycles - 1), so n-cycles sit at rank 0 and the identity on
// top. Element ids follow lexicographic order of image sequences.
struct SymmetricGroupPoset {
  std::size_t n = 0;
  GradedPoset poset;
  std::vector<Permutation> permutations;  // indexed by element id

  ElementId id_of(const Permutation& pi) const;
};

SymmetricGroupPoset symmetric_group_refinement(std::size_t n);

// Set partitions of {1..n}; a cover merges two blocks. Rank is n - #blocks.
// Blocks are sorted by smallest element; ids follow lexicographic order of
// restricted growth strings.
GradedPoset partition_lattice(std::size_t n);

struct AbsoluteOrderCheck {
  bool holds = true;
  // (pi, sigma) where pi <=_T sigma disagrees with sigma <= pi under refinement.
  std::optional<std::pair<Permutation, Permutation>> counterexample;
};

// Compares the absolute order against reachability in the refinement poset
// over all ordered pairs of S_n.
AbsoluteOrderCheck check_absolute_reverse_refinement(std::size_t n);

enum class EdgeColor { Blue, Red, Gray };
std::string_view to_string(EdgeColor color);

// S_{n+1} split into n + 1 copies of S_n by the value pi(n+1). Copy n + 1
// (pi fixes n + 1) is the raised copy.
struct CopyDecomposition {
  std::size_t n = 0;
  SymmetricGroupPoset whole;  // S_{n+1}
  SymmetricGroupPoset part;   // S_n
  std::vector<std::size_t> copy_of;    // element id -> copy index 1..n+1
  std::vector<ElementId> reduction;    // element id of S_{n+1} -> element id of S_n
  std::vector<EdgeColor> edge_color;   // aligned with whole.poset.covers()

  std::size_t raised_copy() const noexcept { return n + 1; }
};

// pi -> pi': drop the fixed point n + 1, or splice n + 1 out of its cycle.
Permutation reduce_permutation(const Permutation& pi);

CopyDecomposition decompose_copies(std::size_t n_plus_1);

}  // namespace posetflow
