#include "utfree/matrices.hpp"

#include <sstream>
#include <stdexcept>

namespace utfree {

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << '/' << denominator(q);
    return os.str();
}

std::optional<Rational> parse_rational(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
    }
    auto read_digits = [&](BigInt& out) -> bool {
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') return false;
        out = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            out = out * 10 + (text[pos] - '0');
            ++pos;
        }
        return true;
    };
    BigInt numerator_part;
    if (!read_digits(numerator_part)) return std::nullopt;
    BigInt denominator_part = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        if (!read_digits(denominator_part)) return std::nullopt;
        if (denominator_part == 0) return std::nullopt;
    }
    if (pos != text.size()) return std::nullopt;
    if (negative) numerator_part = -numerator_part;
    return make_rational(numerator_part, denominator_part);
}

BigInt common_denominator(std::span<const Rational> values) {
    BigInt l = 1;
    for (const auto& q : values) l = lcm(l, denominator(q));
    return l;
}

UTMat2 pow(const UTMat2& m, unsigned long n) {
    UTMat2 acc = UTMat2::identity();
    UTMat2 b = m;
    while (n) {
        if (n & 1) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    return acc;
}

std::variant<CanonicalForm, SingularKind> canonical_form(const UTMat2& m) {
    if (m.e22 != 0 && m.e11 != 0)
        return CanonicalForm{m.e22, m.e11 / m.e22, m.e12 / m.e22};
    if (m.e11 == 0 && m.e22 == 0) return SingularKind::Zero;
    if (m.e22 == 0) return SingularKind::BottomRowZero;
    return SingularKind::TopLeftZero;
}

IntMat IntMat::identity(std::size_t k) {
    IntMat m(k);
    for (std::size_t i = 0; i < k; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMat::upper_triangular() const {
    for (std::size_t i = 1; i < dim_; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (at(i, j) != 0) return false;
    return true;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("IntMat dimension mismatch");
    const std::size_t k = a.dim();
    IntMat out(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            const BigInt& ail = a.at(i, l);
            if (ail == 0) continue;
            for (std::size_t j = 0; j < k; ++j) {
                const BigInt& blj = b.at(l, j);
                if (blj != 0) out.at(i, j) += ail * blj;
            }
        }
    return out;
}

IntMat operator+(const IntMat& a, const IntMat& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("IntMat dimension mismatch");
    IntMat out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
    return out;
}

IntMat& IntMat::operator*=(const BigInt& c) {
    for (auto& e : entries_) e *= c;
    return *this;
}

IntMat pow(const IntMat& m, unsigned long n) {
    IntMat acc = IntMat::identity(m.dim());
    IntMat b = m;
    while (n) {
        if (n & 1) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    return acc;
}

IntMat kronecker(const IntMat& a, const IntMat& b) {
    const std::size_t ka = a.dim(), kb = b.dim();
    IntMat out(ka * kb);
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < ka; ++j) {
            const BigInt& aij = a.at(i, j);
            if (aij == 0) continue;
            for (std::size_t p = 0; p < kb; ++p)
                for (std::size_t q = 0; q < kb; ++q)
                    out.at(i * kb + p, j * kb + q) = aij * b.at(p, q);
        }
    return out;
}

IntMat direct_sum(const IntMat& a, const IntMat& b) {
    const std::size_t ka = a.dim(), kb = b.dim();
    IntMat out(ka + kb);
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < ka; ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < kb; ++i)
        for (std::size_t j = 0; j < kb; ++j) out.at(ka + i, ka + j) = b.at(i, j);
    return out;
}

IntMat unit_matrix(std::size_t k) {
    if (k == 0) throw std::invalid_argument("unit_matrix requires k >= 1");
    IntMat m(k);
    m.at(0, k - 1) = 1;
    return m;
}

}  // namespace utfree
