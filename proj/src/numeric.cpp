#include "k3lattice/numeric.hpp"

#include <stdexcept>

namespace k3lattice {

namespace {

bool is_decimal(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t start = 0;
    if (allow_sign && (s[0] == '+' || s[0] == '-')) start = 1;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

} // namespace

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    // The two-argument cpp_rational constructor rejects negative
    // denominators; division normalizes sign and gcd in one step.
    return Rational(num) / Rational(den);
}

Integer to_integer(const Rational& q) {
    if (!is_integral(q)) throw std::invalid_argument("rational is not an integer: " + format_rational(q));
    return numerator(q);
}

std::string format_integer(const Integer& n) { return n.str(); }

std::string format_rational(const Rational& q) {
    if (is_integral(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Integer parse_integer(std::string_view text) {
    if (!is_decimal(text, true))
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    // The cpp_int constructor accepts hex/octal and rejects a leading '+',
    // so validation happens above and the '+' is dropped here.
    if (text[0] == '+') text.remove_prefix(1);
    return Integer(std::string(text));
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const auto num_part = text.substr(0, slash);
    const auto den_part = text.substr(slash + 1);
    if (!is_decimal(num_part, true) || !is_decimal(den_part, false))
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    const Integer den{std::string(den_part)};
    if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
    return make_rational(parse_integer(num_part), den);
}

std::optional<Integer> exact_sqrt(const Integer& n) {
    if (n < 0) throw std::invalid_argument("exact_sqrt of a negative number");
    const Integer r = sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

} // namespace k3lattice
