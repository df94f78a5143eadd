#include "posetflow/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "posetflow/error.hpp"

namespace posetflow {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<char> hit(images_.size(), 0);
  for (int v : images_) {
    if (v < 1 || v > n || hit[v - 1]) {
      throw Error(ErrorCode::InvalidInput, "image sequence is not a bijection on 1.." +
                                               std::to_string(n));
    }
    hit[v - 1] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::size_t n, int i, int j) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::swap(images.at(i - 1), images.at(j - 1));
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, std::size_t n) {
  std::vector<std::vector<int>> cycles;
  bool open = false;
  std::size_t i = 0;
  int largest = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::InvalidInput,
                "bad cycle notation '" + std::string(text) + "': " + why);
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
    } else if (c == '(') {
      if (open) fail("nested '('");
      open = true;
      cycles.emplace_back();
      ++i;
    } else if (c == ')') {
      if (!open) fail("unmatched ')'");
      if (cycles.back().empty()) fail("empty cycle");
      open = false;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!open) fail("element outside a cycle");
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 1'000'000) fail("element too large");
        ++i;
      }
      if (value < 1) fail("elements start at 1");
      cycles.back().push_back(value);
      largest = std::max(largest, value);
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }
  if (open) fail("unterminated cycle");
  if (n == 0) n = static_cast<std::size_t>(largest);
  if (static_cast<std::size_t>(largest) > n) fail("element exceeds n = " + std::to_string(n));

  std::vector<int> images(n, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int& slot = images[cycle[k] - 1];
      if (slot != 0) fail("element " + std::to_string(cycle[k]) + " repeated");
      slot = cycle[(k + 1) % cycle.size()];
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (images[k] == 0) images[k] = static_cast<int>(k + 1);
  }
  return Permutation(std::move(images));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  const std::size_t n = images_.size();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> result;
  for (std::size_t start = 1; start <= n; ++start) {
    if (seen[start - 1]) continue;
    std::vector<int> cycle;
    int x = static_cast<int>(start);
    while (!seen[x - 1]) {
      seen[x - 1] = 1;
      cycle.push_back(x);
      x = images_[x - 1];
    }
    result.push_back(std::move(cycle));
  }
  std::stable_sort(result.begin(), result.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return result;
}

std::size_t Permutation::cycle_count() const {
  const std::size_t n = images_.size();
  std::vector<char> seen(n, 0);
  std::size_t count = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++count;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(images_[x] - 1)) {
      seen[x] = 1;
    }
  }
  return count;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i] - 1] = static_cast<int>(i + 1);
  }
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::string out;
  for (const auto& cycle : cycles()) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(cycle[k]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.size() != rhs.size()) {
    throw Error(ErrorCode::SizeMismatch, "composing permutations of " +
                                             std::to_string(lhs.size()) + " and " +
                                             std::to_string(rhs.size()) + " points");
  }
  std::vector<int> images(lhs.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = lhs.images()[rhs.images()[i] - 1];
  }
  return Permutation(std::move(images));
}

std::size_t lex_rank(const Permutation& pi) {
  const std::size_t n = pi.size();
  std::size_t rank = 0;
  std::vector<char> used(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const int v = pi.images()[i];
    std::size_t smaller_unused = 0;
    for (int u = 1; u < v; ++u) smaller_unused += used[u] ? 0 : 1;
    rank = rank * (n - i) + smaller_unused;
    used[v] = 1;
  }
  return rank;
}

Permutation lex_unrank(std::size_t n, std::size_t rank) {
  std::vector<std::size_t> factorial(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) factorial[i] = factorial[i - 1] * i;
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> images;
  images.reserve(n);
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t q = rank / factorial[i];
    rank %= factorial[i];
    images.push_back(pool.at(q));
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(q));
  }
  return Permutation(std::move(images));
}

bool absolute_leq(const Permutation& pi, const Permutation& sigma) {
  if (pi.size() != sigma.size()) {
    throw Error(ErrorCode::SizeMismatch, "absolute order needs permutations of equal size");
  }
  return sigma.absolute_length() ==
         pi.absolute_length() + (pi.inverse() * sigma).absolute_length();
}

}  // namespace posetflow
