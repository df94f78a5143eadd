#include "posetflow/numeric.hpp"

#include <cctype>

#include "posetflow/error.hpp"

namespace posetflow {

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_fraction_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) {
    throw Error(ErrorCode::InvalidInput, "empty integer literal");
  }
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::InvalidInput,
                  "not a decimal integer: '" + std::string(text) + "'");
    }
  }
  return BigInt(std::string(text));
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  const BigInt num = parse_bigint(text.substr(0, slash));
  const BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) {
    throw Error(ErrorCode::InvalidInput,
                "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace posetflow
