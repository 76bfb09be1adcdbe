#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace utfree {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar, always kept in canonical reduced form with a
// positive denominator, so structural equality equals mathematical equality.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(num) / Rational(den);
}

inline BigInt num(const Rational& q) { return numerator(q); }
inline BigInt den(const Rational& q) { return denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Rational rational_pow(const Rational& base, unsigned long e) {
    Rational acc(1);
    Rational b = base;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

// Text format: optional leading '-', decimal integer, optionally '/' and a
// positive decimal integer. Output is always reduced with the sign on the
// numerator ("-3/2", "7", "0").
std::string to_string(const Rational& q);
std::optional<Rational> parse_rational(std::string_view text);

inline Rational parse_rational_or_throw(std::string_view text) {
    auto q = parse_rational(text);
    if (!q) throw std::invalid_argument("malformed rational: " + std::string(text));
    return *q;
}

// Least common multiple of the denominators, as a positive integer.
BigInt common_denominator(std::span<const Rational> values);

}  // namespace utfree
