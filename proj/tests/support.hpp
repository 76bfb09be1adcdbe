#pragma once

#include "utfree/decider.hpp"
#include "utfree/rational.hpp"

#include <random>
#include <string_view>
#include <vector>

namespace test_support {

inline utfree::Rational q(std::string_view text) {
    return utfree::parse_rational_or_throw(text);
}

inline utfree::UTMat2 m2(std::string_view e11, std::string_view e12, std::string_view e22) {
    return {q(e11), q(e12), q(e22)};
}

inline utfree::Instance instance(utfree::UTMat2 mx, std::vector<utfree::UTMat2> nz) {
    utfree::Instance inst;
    inst.mx = std::move(mx);
    inst.nz = std::move(nz);
    return inst;
}

// Entries used by the randomized suites: small nonzero rationals, a few of
// them non-integer, matching the decider-oracle agreement requirements.
inline utfree::Rational random_entry(std::mt19937& rng, bool allow_zero) {
    static const utfree::Rational pool[] = {
        q("-2"), q("-1"), q("1"), q("2"), q("3"), q("1/2"), q("3/2"), q("-1/2"),
    };
    std::uniform_int_distribution<std::size_t> pick(0, allow_zero ? 8 : 7);
    const std::size_t i = pick(rng);
    return i == 8 ? utfree::Rational(0) : pool[i];
}

inline utfree::UTMat2 random_nonsingular(std::mt19937& rng) {
    return {random_entry(rng, false), random_entry(rng, true), random_entry(rng, false)};
}

}  // namespace test_support
