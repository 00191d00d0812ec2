#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace permstat {

// Exact arbitrary-precision arithmetic. Rational values are kept in
// canonical form by the backend: gcd(|num|, den) = 1 and den > 0.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using BigCount = BigInt;

// base^exp by binary exponentiation, exact.
Rational pow_rational(const Rational& base, std::uint64_t exp);

// "p/q" when the denominator is not 1, plain "p" otherwise.
std::string rational_to_string(const Rational& value);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
// The denominator must be positive and nonzero.
Rational rational_from_string(std::string_view text);

// Decimal approximation with exactly `digits` fractional digits,
// rounded half away from zero. Display-only; never fed back into math.
std::string decimal_string(const Rational& value, unsigned digits);

} // namespace permstat
