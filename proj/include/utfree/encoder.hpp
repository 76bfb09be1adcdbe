#pragma once

#include "utfree/matrices.hpp"
#include "utfree/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace utfree {

struct ArityMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct IndexOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonIntegerCoefficient : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct MalformedGadget : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sparse multivariate polynomial with rational coefficients; zero coefficients
// are never stored.
class Polynomial {
public:
    using Exponents = std::vector<unsigned long>;

    explicit Polynomial(std::size_t arity) : arity_(arity) {}
    static Polynomial constant(std::size_t arity, const Rational& c);
    static Polynomial variable(std::size_t arity, std::size_t index);  // 1-based index

    std::size_t arity() const { return arity_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool integer_coefficients() const;

    void add_term(const Exponents& exps, const Rational& coeff);
    Rational evaluate(std::span<const BigInt> point) const;
    // Substitutes args[i] for variable i+1; all args share one arity.
    Polynomial substitute(std::span<const Polynomial> args) const;

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::size_t arity_;
    std::map<Exponents, Rational> terms_;
};

// Upper-triangular integer matrices (A, M, N, B) with
//   A M^{a_1} N M^{a_2} N ... N M^{a_t} B = p(a_1, ..., a_t) * E_k
// for all nonnegative integer exponent vectors.
struct Gadget {
    std::size_t arity = 0;
    std::size_t dimension = 0;
    IntMat a, m, n, b;
};

Gadget variable_gadget(std::size_t t, std::size_t index);  // index in 1..t
Gadget constant_gadget(std::size_t t, const BigInt& c);
Gadget sum_gadget(const Gadget& g1, const Gadget& g2);
Gadget product_gadget(const Gadget& g1, const Gadget& g2);
Gadget scale_gadget(const Gadget& g, const BigInt& c);

// Monomial-by-monomial compilation; requires integer coefficients.
Gadget compile(const Polynomial& p);

// The matrix product's (1, k) entry; every other entry must vanish.
BigInt evaluate_gadget(const Gadget& g, std::span<const unsigned long> point);

// C_2(x1, x2) = (x1+x2)(x1+x2+1)/2 + x2; C_{k+1} = C_2(C_k, x_{k+1}).
// Injective on N^k; carries rational coefficients.
Polynomial cantor_polynomial(std::size_t k);

// Q = e * C_{m+1}(x_1, ..., x_m, P^2 * x_{m+1}) with e the least common
// multiple of the coefficient denominators of the unscaled expansion.
struct ScaledCombination {
    Polynomial q;
    BigInt e;
};
ScaledCombination build_q(const Polynomial& p);

// Bounded search for distinct b, c in [0, bound]^m with Q(a, b) = Q(a, c);
// a collision exists iff P(a, .) = 0 is solvable in nonnegative integers.
struct Lemma7Collision {
    std::vector<unsigned long> left, right;
};
std::optional<Lemma7Collision> lemma7_check(const Polynomial& p, unsigned long a,
                                            unsigned long bound);

// Evaluates mu_a(z_1 x^{e_1} y ... y x^{e_m} z_2) with mu_a(z_1) = A M^a N for
// the gadget compiled from Q; equals Q(a, e_1, ..., e_m) * E_k.
IntMat mu_a_products(const Polynomial& p, unsigned long a,
                     std::span<const unsigned long> exps);

}  // namespace utfree
