#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace posetflow {

// Exact arithmetic used throughout: weights and capacities are integers,
// flow witnesses are rationals.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const BigInt& value);

// Always "p/q" with q >= 1, including integers ("3/1").
std::string to_fraction_string(const Rational& value);

// Accepts an optional leading '-' followed by decimal digits.
BigInt parse_bigint(std::string_view text);

// Accepts "p", "p/q" with q != 0.
Rational parse_rational(std::string_view text);

BigInt binomial(unsigned n, unsigned k);

}  // namespace posetflow
