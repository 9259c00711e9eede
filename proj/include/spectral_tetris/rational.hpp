#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace stetris {

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

/// Parses "p", "-p" or "p/q" with decimal digits only. Returns nullopt on any
/// malformed input or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

}  // namespace stetris
