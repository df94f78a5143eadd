#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "posetflow/numeric.hpp"

namespace posetflow {

enum class StirlingKind { First, Second };

std::string_view to_string(StirlingKind kind);

// Exact Stirling triangle built row by row from the recurrences
//   first kind (unsigned):  s(n+1, k) = n * s(n, k) + s(n, k-1)
//   second kind:            S(n+1, k) = k * S(n, k) + S(n, k-1)
// with s(0, 0) = S(0, 0) = 1.
class StirlingTable {
 public:
  explicit StirlingTable(StirlingKind kind);

  StirlingKind kind() const noexcept { return kind_; }
  // Row n has n + 1 entries, k = 0..n. Extends the table as needed.
  const std::vector<BigInt>& row(std::size_t n);
  // Zero outside 0 <= k <= n.
  BigInt at(std::size_t n, std::size_t k);
  std::size_t rows_computed() const noexcept { return rows_.size(); }

 private:
  StirlingKind kind_;
  std::vector<std::vector<BigInt>> rows_;
};

// Thread-safe access to process-wide cached tables; returns a copy of the row.
std::vector<BigInt> stirling_row(StirlingKind kind, std::size_t n);

}  // namespace posetflow
