#pragma once

#include "utfree/automata.hpp"
#include "utfree/matrices.hpp"
#include "utfree/numeration.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace utfree {

struct UnsupportedInstance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A morphism on {x, z_1, ..., z_{t+1}} given by its images: mx = mu(x) and
// nz[i] = mu(z_{i+1}), restricted to words z_1 x^{m_1} z_2 ... z_t x^{m_t} z_{t+1}.
struct Instance {
    UTMat2 mx;
    std::vector<UTMat2> nz;  // t + 1 matrices, all nonsingular

    std::size_t t() const { return nz.size() - 1; }

    // Exact image of the word with the given exponent vector (length t, >= 0).
    UTMat2 image(std::span<const unsigned long> exponents) const;

    // Throws UnsupportedInstance when the hypothesis fails.
    void validate() const;
};

enum class Branch {
    SingularXT1,
    SingularXTGe2,
    AMinus1T1,
    AMinus1TGe2,
    A1T1,
    A1T2,
    A1TGe3,
    MainPairCollision,
    MainSelfAmbiguity,
    MainSelfCollision,
    MainInjective,
    ProblemBVacuous,
};

std::string branch_name(Branch b);

// Exponent vectors of two words with equal image.
struct Witness {
    std::vector<unsigned long> left, right;
    friend bool operator==(const Witness&, const Witness&) = default;
    friend auto operator<=>(const Witness&, const Witness&) = default;
};

struct Verdict {
    bool injective = false;
    Branch branch = Branch::MainInjective;
    std::optional<Witness> witness;
};

// One subset K of {1..t}: exponents forced to zero on K, the neighbouring N's
// multiplied through, and the digit data of the collapsed product.
struct SubsetProblem {
    unsigned long k_mask = 0;  // bit i-1 set means position i is in K
    std::size_t t = 0;
    std::size_t s = 0;  // t - |K|
    std::vector<UTMat2> collapsed;
    std::optional<DigitSequence> seq;  // absent when s = 0
};

SubsetProblem subset_problem(const Instance& inst, const CanonicalForm& cf,
                             unsigned long k_mask);

struct PairOutcome {
    Branch branch = Branch::ProblemBVacuous;
    std::optional<Witness> witness;
};

// The automaton check for one subset pair: emptiness of the intersection of
// the pair-pattern automaton and the equal-value acceptor, preceded by the
// ambiguity pre-check when both subsets coincide.
PairOutcome check_pair(const SubsetProblem& pa, const SubsetProblem& pb, bool same);

Verdict decide(const Instance& inst);

// Branch entry points, exposed for targeted tests; decide dispatches to them.
Verdict branch_singular_x(const Instance& inst, SingularKind kind);
Verdict branch_a_minus1(const Instance& inst, const CanonicalForm& cf);
Verdict branch_a_1(const Instance& inst, const CanonicalForm& cf);

bool verify_witness(const Instance& inst, const Witness& w);

}  // namespace utfree
