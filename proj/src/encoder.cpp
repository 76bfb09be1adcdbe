#include "utfree/encoder.hpp"

#include <algorithm>

namespace utfree {

Polynomial Polynomial::constant(std::size_t arity, const Rational& c) {
    Polynomial p(arity);
    p.add_term(Exponents(arity, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t index) {
    if (index < 1 || index > arity) throw IndexOutOfRange("variable index out of range");
    Polynomial p(arity);
    Exponents e(arity, 0);
    e[index - 1] = 1;
    p.add_term(e, Rational(1));
    return p;
}

bool Polynomial::integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return is_integer(t.second); });
}

void Polynomial::add_term(const Exponents& exps, const Rational& coeff) {
    if (exps.size() != arity_) throw ArityMismatch("exponent vector length mismatch");
    if (coeff == 0) return;
    auto [it, fresh] = terms_.try_emplace(exps, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Polynomial::evaluate(std::span<const BigInt> point) const {
    if (point.size() != arity_) throw ArityMismatch("evaluation point length mismatch");
    Rational acc(0);
    for (const auto& [exps, coeff] : terms_) {
        Rational term = coeff;
        for (std::size_t i = 0; i < arity_; ++i)
            for (unsigned long e = 0; e < exps[i]; ++e) term *= Rational(point[i]);
        acc += term;
    }
    return acc;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> args) const {
    if (args.size() != arity_) throw ArityMismatch("substitution needs one argument per variable");
    const std::size_t out_arity = args.empty() ? 0 : args[0].arity();
    Polynomial acc(out_arity);
    for (const auto& [exps, coeff] : terms_) {
        Polynomial term = Polynomial::constant(out_arity, coeff);
        for (std::size_t i = 0; i < arity_; ++i)
            for (unsigned long e = 0; e < exps[i]; ++e) term = term * args[i];
        acc = acc + term;
    }
    return acc;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    if (p.arity() != q.arity()) throw ArityMismatch("polynomial arity mismatch");
    Polynomial out = p;
    for (const auto& [exps, coeff] : q.terms_) out.add_term(exps, coeff);
    return out;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.arity() != q.arity()) throw ArityMismatch("polynomial arity mismatch");
    Polynomial out(p.arity());
    for (const auto& [e1, c1] : p.terms_)
        for (const auto& [e2, c2] : q.terms_) {
            Polynomial::Exponents e(p.arity());
            for (std::size_t i = 0; i < p.arity(); ++i) e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial out(p.arity());
    for (const auto& [exps, coeff] : p.terms_) out.add_term(exps, c * coeff);
    return out;
}

Gadget variable_gadget(std::size_t t, std::size_t index) {
    if (index < 1 || index > t) throw IndexOutOfRange("variable index out of range");
    const std::size_t k = 2 * t;
    Gadget g{t, k, IntMat(k), IntMat(k), IntMat(k), IntMat(k)};
    g.a.at(0, 0) = 1;
    g.b.at(k - 1, k - 1) = 1;
    // M = I + ... + E + ... + I with E = [[1,1],[0,1]] in block position index.
    for (std::size_t i = 0; i < t; ++i) {
        g.m.at(2 * i, 2 * i) = 1;
        g.m.at(2 * i + 1, 2 * i + 1) = 1;
        if (i + 1 == index) g.m.at(2 * i, 2 * i + 1) = 1;
    }
    // N shifts each 2x2 block one position to the right.
    for (std::size_t i = 0; i + 1 < t; ++i) {
        g.n.at(2 * i, 2 * i + 2) = 1;
        g.n.at(2 * i + 1, 2 * i + 3) = 1;
    }
    return g;
}

Gadget constant_gadget(std::size_t t, const BigInt& c) {
    Gadget g{t, 2, IntMat(2), IntMat::identity(2), IntMat::identity(2), IntMat::identity(2)};
    g.a.at(0, 1) = c;
    return g;
}

Gadget sum_gadget(const Gadget& g1, const Gadget& g2) {
    if (g1.arity != g2.arity) throw ArityMismatch("gadget arity mismatch");
    const std::size_t k = g1.dimension + g2.dimension;
    IntMat row_ones(k), col_ones(k);
    for (std::size_t j = 0; j < k; ++j) {
        row_ones.at(0, j) = 1;
        col_ones.at(j, k - 1) = 1;
    }
    return {g1.arity, k, row_ones * direct_sum(g1.a, g2.a), direct_sum(g1.m, g2.m),
            direct_sum(g1.n, g2.n), direct_sum(g1.b, g2.b) * col_ones};
}

Gadget product_gadget(const Gadget& g1, const Gadget& g2) {
    if (g1.arity != g2.arity) throw ArityMismatch("gadget arity mismatch");
    return {g1.arity, g1.dimension * g2.dimension, kronecker(g1.a, g2.a),
            kronecker(g1.m, g2.m), kronecker(g1.n, g2.n), kronecker(g1.b, g2.b)};
}

Gadget scale_gadget(const Gadget& g, const BigInt& c) {
    Gadget out = g;
    out.a *= c;
    return out;
}

Gadget compile(const Polynomial& p) {
    if (!p.integer_coefficients())
        throw NonIntegerCoefficient("compile requires integer coefficients");
    const std::size_t t = p.arity();
    std::optional<Gadget> acc;
    for (const auto& [exps, coeff] : p.terms()) {
        std::optional<Gadget> mono;
        for (std::size_t i = 0; i < t; ++i)
            for (unsigned long e = 0; e < exps[i]; ++e) {
                Gadget v = variable_gadget(t, i + 1);
                mono = mono ? product_gadget(*mono, v) : std::move(v);
            }
        Gadget term = mono ? scale_gadget(*mono, numerator(coeff))
                           : constant_gadget(t, numerator(coeff));
        acc = acc ? sum_gadget(*acc, term) : std::move(term);
    }
    if (!acc) acc = constant_gadget(t, 0);
    return *std::move(acc);
}

BigInt evaluate_gadget(const Gadget& g, std::span<const unsigned long> point) {
    if (point.size() != g.arity) throw ArityMismatch("evaluation point length mismatch");
    IntMat prod = g.a;
    for (std::size_t i = 0; i < g.arity; ++i) {
        prod = prod * pow(g.m, point[i]);
        if (i + 1 < g.arity) prod = prod * g.n;
    }
    prod = prod * g.b;
    const std::size_t k = g.dimension;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (!(i == 0 && j == k - 1) && prod.at(i, j) != 0)
                throw MalformedGadget("gadget product has a nonzero entry off (1, k)");
    return prod.at(0, k - 1);
}

Polynomial cantor_polynomial(std::size_t k) {
    if (k < 2) throw IndexOutOfRange("Cantor polynomials start at k = 2");
    // C_2 = (x1 + x2)(x1 + x2 + 1)/2 + x2.
    Polynomial c2(2);
    const Polynomial x1 = Polynomial::variable(2, 1);
    const Polynomial x2 = Polynomial::variable(2, 2);
    const Polynomial sum = x1 + x2;
    c2 = Rational(1, 2) * (sum * (sum + Polynomial::constant(2, Rational(1)))) + x2;
    Polynomial acc = c2;
    for (std::size_t i = 2; i < k; ++i) {
        // C_{i+1}(x_1..x_{i+1}) = C_2(C_i(x_1..x_i), x_{i+1}).
        std::vector<Polynomial> lift;
        for (std::size_t j = 1; j <= i; ++j) lift.push_back(Polynomial::variable(i + 1, j));
        std::vector<Polynomial> args = {acc.substitute(lift), Polynomial::variable(i + 1, i + 1)};
        acc = c2.substitute(args);
    }
    return acc;
}

ScaledCombination build_q(const Polynomial& p) {
    if (!p.integer_coefficients())
        throw NonIntegerCoefficient("build_q requires integer coefficients");
    const std::size_t m = p.arity();
    const Polynomial cantor = cantor_polynomial(m + 1);
    std::vector<Polynomial> lift;
    for (std::size_t j = 1; j <= m; ++j) lift.push_back(Polynomial::variable(m + 1, j));
    const Polynomial p_lifted = p.substitute(lift);
    std::vector<Polynomial> args = lift;
    args.push_back(p_lifted * p_lifted * Polynomial::variable(m + 1, m + 1));
    const Polynomial unscaled = cantor.substitute(args);
    BigInt e = 1;
    for (const auto& [exps, coeff] : unscaled.terms()) e = lcm(e, denominator(coeff));
    return {Rational(e) * unscaled, e};
}

std::optional<Lemma7Collision> lemma7_check(const Polynomial& p, unsigned long a,
                                            unsigned long bound) {
    const std::size_t m = p.arity();
    const Polynomial q = build_q(p).q;
    std::map<Rational, std::vector<unsigned long>> seen;
    std::vector<unsigned long> point(m, 0);
    while (true) {
        std::vector<BigInt> args;
        args.push_back(a);
        for (auto v : point) args.push_back(v);
        const Rational value = q.evaluate(args);
        auto [it, fresh] = seen.try_emplace(value, point);
        if (!fresh) return Lemma7Collision{it->second, point};
        // odometer over [0, bound]^m
        std::size_t pos = 0;
        while (pos < m && point[pos] == bound) point[pos++] = 0;
        if (pos == m) return std::nullopt;
        ++point[pos];
    }
}

IntMat mu_a_products(const Polynomial& p, unsigned long a,
                     std::span<const unsigned long> exps) {
    if (exps.size() != p.arity()) throw ArityMismatch("need one exponent per search variable");
    const Gadget g = compile(build_q(p).q);
    IntMat prod = g.a * pow(g.m, a) * g.n;  // mu_a(z_1) = mu(z_1 x^a y)
    for (std::size_t i = 0; i < exps.size(); ++i) {
        prod = prod * pow(g.m, exps[i]);
        if (i + 1 < exps.size()) prod = prod * g.n;
    }
    return prod * g.b;
}

}  // namespace utfree
