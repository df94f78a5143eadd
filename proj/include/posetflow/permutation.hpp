#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace posetflow {

// A permutation of {1..n}. images()[i - 1] holds pi(i).
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidInput unless images is a bijection on {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t n);
  // Parses cycle notation such as "(1 4)(2 3)". Elements not mentioned are
  // fixed points. n = 0 means "largest element mentioned".
  static Permutation parse(std::string_view cycles, std::size_t n = 0);

  std::size_t size() const noexcept { return images_.size(); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& images() const noexcept { return images_; }

  // Each cycle starts at its smallest element; longer cycles first, ties by
  // smallest element; fixed points included.
  std::vector<std::vector<int>> cycles() const;
  std::size_t cycle_count() const;
  // n minus the number of cycles.
  std::size_t absolute_length() const { return size() - cycle_count(); }

  Permutation inverse() const;
  // Transposition of i and j on {1..n}.
  static Permutation transposition(std::size_t n, int i, int j);

  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// (lhs * rhs)(x) = lhs(rhs(x)). Throws SizeMismatch.
Permutation operator*(const Permutation& lhs, const Permutation& rhs);

// Position of the permutation in lexicographic order of image sequences.
std::size_t lex_rank(const Permutation& pi);
Permutation lex_unrank(std::size_t n, std::size_t rank);

// pi <=_T sigma  iff  l_T(sigma) = l_T(pi) + l_T(pi^-1 sigma). Throws SizeMismatch.
bool absolute_leq(const Permutation& pi, const Permutation& sigma);

}  // namespace posetflow
