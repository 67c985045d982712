#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace k3lattice {

// Exact arbitrary-precision scalars. Rational values are kept normalized by
// the backend: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den in lowest terms with a positive denominator.
/// Throws std::invalid_argument if den == 0.
Rational make_rational(const Integer& num, const Integer& den);

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

/// Exact conversion; throws std::invalid_argument if q is not an integer.
Integer to_integer(const Rational& q);

std::string format_integer(const Integer& n);

/// "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& q);

/// Strict parse of an optional-sign decimal integer. Throws on anything else.
Integer parse_integer(std::string_view text);

/// Strict parse of "p" or "p/q" (p optional-sign decimal, q positive decimal).
Rational parse_rational(std::string_view text);

/// Floor square root paired with exactness: returns r with r*r == n, or
/// nullopt when n is not a perfect square. Requires n >= 0.
std::optional<Integer> exact_sqrt(const Integer& n);

} // namespace k3lattice
