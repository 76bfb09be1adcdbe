#pragma once

#include "utfree/matrices.hpp"
#include "utfree/rational.hpp"

#include <span>
#include <vector>

namespace utfree {

// A digit is a letter identified by its rational value.
using Digit = Rational;

// Most-significant digit first: digits[0] carries the highest power of the base.
using DigitWord = std::vector<Digit>;

// Rational base r = u/v in lowest terms, r not in {-1, 0, 1}.
struct Base {
    Rational r;
    BigInt u;  // numerator, may be negative
    BigInt v;  // denominator, > 0, coprime with u

    explicit Base(const Rational& value);
};

struct BadBase : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SingularInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadArity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// val_r(w) = sum w_i r^i with the rightmost digit at exponent 0.
Rational value_of(std::span<const Digit> w, const Rational& r);

// M^n for M = c*[[a,b],[0,1]], via the closed form c^n*[[a^n, val_a(b^n)],[0,1]];
// n = 0 yields the identity.
UTMat2 power_closed_form(const Rational& c, const Rational& a, const Rational& b,
                         unsigned long n);

// The digit data extracted from a product N_1 M^{m_1} N_2 ... N_s M^{m_s} N_{s+1}:
// for all m_i >= 1 the product equals
//   c^{sum m} * [[ d1 * a^{sum m},  val_a(q_1 p_1^{m_s-1} q_2 ... q_s p_s^{m_1-1} q_{s+1}) ],
//                [ 0,               d2 ]].
// Note the reversed pairing: p_1 repeats m_s - 1 times and p_s repeats m_1 - 1 times.
struct DigitSequence {
    std::size_t s = 0;
    std::vector<Rational> q;  // s + 1 entries
    std::vector<Rational> p;  // s entries
    Rational d1, d2;          // products of the A_i's resp. C_i's
    Rational c, a;            // the scalar and base of the middle matrix
};

DigitSequence digit_sequence(const CanonicalForm& cf, std::span<const UTMat2> n);

// Materializes q_1 p_1^{m_s-1} q_2 ... q_s p_s^{m_1-1} q_{s+1} for exponents m_i >= 1.
DigitWord instantiate_word(const DigitSequence& seq, std::span<const unsigned long> exponents);

// Multiplies every digit by d; value_of scales by d in every base.
DigitWord scale_digits(std::span<const Digit> w, const Rational& d);

}  // namespace utfree
