#pragma once

#include <doctest.h>

#include <string>
#include <vector>

#include "posetflow/error.hpp"
#include "posetflow/numeric.hpp"

// Runs `expr` and checks that it throws posetflow::Error with the given code.
#define CHECK_ERROR_CODE(expr, expected_code)                              \
  do {                                                                     \
    bool thrown_ = false;                                                  \
    try {                                                                  \
      (void)(expr);                                                        \
    } catch (const posetflow::Error& e) {                                  \
      thrown_ = true;                                                      \
      CHECK_MESSAGE(e.code() == (expected_code), e.what());                \
    }                                                                      \
    CHECK_MESSAGE(thrown_, "expected posetflow::Error from " #expr);       \
  } while (false)

inline std::vector<posetflow::BigInt> bigs(std::initializer_list<long long> values) {
  std::vector<posetflow::BigInt> out;
  for (long long v : values) out.emplace_back(v);
  return out;
}

inline posetflow::BigInt big(const std::string& decimal) { return posetflow::parse_bigint(decimal); }
