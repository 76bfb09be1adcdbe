#pragma once

#include "utfree/rational.hpp"

#include <cstddef>
#include <variant>
#include <vector>

namespace utfree {

// 2x2 upper-triangular rational matrix; the (2,1) entry is implicitly zero.
struct UTMat2 {
    Rational e11, e12, e22;

    static UTMat2 identity() { return {Rational(1), Rational(0), Rational(1)}; }
    static UTMat2 zero() { return {Rational(0), Rational(0), Rational(0)}; }

    Rational det() const { return e11 * e22; }
    bool singular() const { return e11 == 0 || e22 == 0; }

    friend UTMat2 operator*(const UTMat2& x, const UTMat2& y) {
        return {x.e11 * y.e11, x.e11 * y.e12 + x.e12 * y.e22, x.e22 * y.e22};
    }
    friend bool operator==(const UTMat2&, const UTMat2&) = default;
};

UTMat2 pow(const UTMat2& m, unsigned long n);

// M = c * [[a, b], [0, 1]] with c = e22, a = e11/e22, b = e12/e22.
struct CanonicalForm {
    Rational c, a, b;

    UTMat2 reconstruct() const { return {c * a, c * b, c}; }
};

enum class SingularKind {
    BottomRowZero,  // [[a, b], [0, 0]]
    TopLeftZero,    // [[0, b], [0, c]]
    Zero,           // both diagonal entries zero
};

std::variant<CanonicalForm, SingularKind> canonical_form(const UTMat2& m);

// k x k integer matrix, dimension fixed at runtime; row-major entries.
class IntMat {
public:
    IntMat() : dim_(0) {}
    explicit IntMat(std::size_t k) : dim_(k), entries_(k * k) {}

    static IntMat identity(std::size_t k);
    static IntMat zero(std::size_t k) { return IntMat(k); }

    std::size_t dim() const { return dim_; }
    BigInt& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    bool upper_triangular() const;

    friend IntMat operator*(const IntMat& a, const IntMat& b);
    friend IntMat operator+(const IntMat& a, const IntMat& b);
    IntMat& operator*=(const BigInt& c);
    friend bool operator==(const IntMat&, const IntMat&) = default;

private:
    std::size_t dim_;
    std::vector<BigInt> entries_;
};

IntMat pow(const IntMat& m, unsigned long n);

// Block matrix (a_ij * B); preserves upper-triangularity.
IntMat kronecker(const IntMat& a, const IntMat& b);

// Block-diagonal sum; preserves upper-triangularity.
IntMat direct_sum(const IntMat& a, const IntMat& b);

// E_k: the k x k matrix whose only nonzero entry is a 1 at (1, k).
IntMat unit_matrix(std::size_t k);

}  // namespace utfree
