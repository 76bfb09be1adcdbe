#include "utfree/numeration.hpp"

#include <stdexcept>

namespace utfree {

Base::Base(const Rational& value) : r(value) {
    if (r == 0 || r == 1 || r == -1)
        throw BadBase("base must not be -1, 0, or 1, got " + to_string(r));
    u = numerator(r);
    v = denominator(r);
}

Rational value_of(std::span<const Digit> w, const Rational& r) {
    Rational acc(0);
    for (const auto& d : w) acc = acc * r + d;
    return acc;
}

UTMat2 power_closed_form(const Rational& c, const Rational& a, const Rational& b,
                         unsigned long n) {
    if (n == 0) return UTMat2::identity();
    const Rational cn = rational_pow(c, n);
    const DigitWord repeated(n, b);
    return {cn * rational_pow(a, n), cn * value_of(repeated, a), cn};
}

DigitSequence digit_sequence(const CanonicalForm& cf, std::span<const UTMat2> n) {
    if (cf.a == 0 || cf.c == 0) throw SingularInput("singular canonical form");
    if (n.size() < 2) throw SingularInput("digit_sequence needs at least two matrices");
    for (const auto& m : n)
        if (m.singular()) throw SingularInput("singular matrix among the N_i");

    const Rational& b = cf.b;
    // Base case s = 1 with N_1, N_2.
    const UTMat2& n1 = n[0];
    const UTMat2& n2 = n[1];
    DigitSequence seq;
    seq.s = 1;
    seq.q = {n1.e11 * n2.e12, n2.e22 * (n1.e11 * b + n1.e12)};
    seq.p = {n1.e11 * n2.e22 * b};
    seq.d1 = n1.e11 * n2.e11;
    seq.d2 = n1.e22 * n2.e22;
    seq.c = cf.c;
    seq.a = cf.a;

    // Inductive step: append N_{s+2} = [[A,B],[0,C]]. The new exponent block is
    // rightmost in the matrix product but leads the digit word.
    for (std::size_t i = 2; i < n.size(); ++i) {
        const Rational& big_a = n[i].e11;
        const Rational& big_b = n[i].e12;
        const Rational& big_c = n[i].e22;

        std::vector<Rational> q_next;
        q_next.reserve(seq.q.size() + 1);
        q_next.push_back(seq.d1 * big_b);
        q_next.push_back(big_c * (seq.d1 * b + seq.q[0]));
        for (std::size_t j = 1; j < seq.q.size(); ++j) q_next.push_back(big_c * seq.q[j]);

        std::vector<Rational> p_next;
        p_next.reserve(seq.p.size() + 1);
        p_next.push_back(seq.d1 * big_c * b);
        for (const auto& pj : seq.p) p_next.push_back(big_c * pj);

        seq.q = std::move(q_next);
        seq.p = std::move(p_next);
        seq.d1 *= big_a;
        seq.d2 *= big_c;
        ++seq.s;
    }
    return seq;
}

DigitWord instantiate_word(const DigitSequence& seq, std::span<const unsigned long> exponents) {
    if (exponents.size() != seq.s)
        throw BadArity("expected " + std::to_string(seq.s) + " exponents, got " +
                       std::to_string(exponents.size()));
    for (auto m : exponents)
        if (m < 1) throw BadArity("exponents must be >= 1");

    DigitWord w;
    for (std::size_t i = 0; i < seq.s; ++i) {
        w.push_back(seq.q[i]);
        // p_{i+1} repeats m_{s-i} - 1 times.
        const unsigned long reps = exponents[seq.s - 1 - i] - 1;
        for (unsigned long j = 0; j < reps; ++j) w.push_back(seq.p[i]);
    }
    w.push_back(seq.q[seq.s]);
    return w;
}

DigitWord scale_digits(std::span<const Digit> w, const Rational& d) {
    if (d == 0) throw std::invalid_argument("scale factor must be nonzero");
    DigitWord out;
    out.reserve(w.size());
    for (const auto& digit : w) out.push_back(digit * d);
    return out;
}

}  // namespace utfree
