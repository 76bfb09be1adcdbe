#pragma once

#include "utfree/decider.hpp"
#include "utfree/numeration.hpp"

#include <optional>
#include <vector>

namespace utfree {

// Exhaustive ground truth over bounded exponents. Absence of collisions within
// a bound never proves injectivity; only the decision procedure does.
struct CollisionReport {
    bool found = false;
    std::vector<Witness> pairs;  // each pair ordered left < right; list sorted
    unsigned long bound = 0;
};

// Serial reference enumeration of [0, bound]^t; kept as the baseline the
// parallel kernel is checked and benchmarked against.
CollisionReport search_collisions_serial(const Instance& inst, unsigned long bound);

// OpenMP enumeration partitioned on the first exponent; identical output to
// the serial reference.
CollisionReport search_collisions_parallel(const Instance& inst, unsigned long bound);

inline CollisionReport search_collisions(const Instance& inst, unsigned long bound) {
    return search_collisions_parallel(inst, bound);
}

// Distinct exponent tuples in [1, bound]^s with equal instantiated words;
// brute-force counterpart of the ambiguity check.
std::optional<std::pair<std::vector<unsigned long>, std::vector<unsigned long>>>
tuple_collision_bruteforce(const DigitSequence& seq, unsigned long bound);

}  // namespace utfree
