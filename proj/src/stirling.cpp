#include "posetflow/stirling.hpp"

#include <mutex>

namespace posetflow {

std::string_view to_string(StirlingKind kind) {
  return kind == StirlingKind::First ? "first" : "second";
}

StirlingTable::StirlingTable(StirlingKind kind) : kind_(kind) { rows_.push_back({1}); }

const std::vector<BigInt>& StirlingTable::row(std::size_t n) {
  while (rows_.size() <= n) {
    const std::size_t m = rows_.size() - 1;  // building row m + 1 from row m
    const auto& prev = rows_.back();
    std::vector<BigInt> next(m + 2, 0);
    for (std::size_t k = 1; k <= m + 1; ++k) {
      const BigInt factor = kind_ == StirlingKind::First ? BigInt(m) : BigInt(k);
      const BigInt same = k <= m ? prev[k] : BigInt(0);
      next[k] = factor * same + prev[k - 1];
    }
    rows_.push_back(std::move(next));
  }
  return rows_[n];
}

BigInt StirlingTable::at(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  return row(n)[k];
}

std::vector<BigInt> stirling_row(StirlingKind kind, std::size_t n) {
  static std::mutex mutex;
  static StirlingTable first(StirlingKind::First);
  static StirlingTable second(StirlingKind::Second);
  std::lock_guard lock(mutex);
  return (kind == StirlingKind::First ? first : second).row(n);
}

}  // namespace posetflow
