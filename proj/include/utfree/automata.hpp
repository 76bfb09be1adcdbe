#pragma once

#include "utfree/nfa.hpp"
#include "utfree/numeration.hpp"
#include "utfree/rational.hpp"

#include <compare>
#include <set>
#include <vector>

namespace utfree {

// A vertical pair of digits; a pair word encodes two ordinary words of equal
// length.
struct PairLetter {
    Digit top;
    Digit bottom;

    friend bool operator==(const PairLetter& x, const PairLetter& y) {
        return x.top == y.top && x.bottom == y.bottom;
    }
    friend bool operator<(const PairLetter& x, const PairLetter& y) {
        if (x.top != y.top) return x.top < y.top;
        return x.bottom < y.bottom;
    }
};

// The regular expression q_1 p_1* q_2 ... q_s p_s* q_{s+1}.
struct PatternSpec {
    std::vector<Digit> fixed;    // s + 1 entries
    std::vector<Digit> starred;  // s entries
};

// The equal-value automaton for integer digit set S in base r, |r| > 1. It
// reads pair words least-significant digit first: the accepted language is the
// reversal of { [w1; w2] : val_r(w1) = val_r(w2) }. States are q_i for the
// integers i in [-d, d] with d = (2m-2)/(|r|-1), m = max|digit| + 1; q_0 is
// both initial and accepting, and q_i --(a,b)--> q_j exactly when i+a-b = r*j.
Nfa<PairLetter> equality_automaton(const Base& r, const std::set<BigInt>& digits);

// Accepts exactly L(P); states are the s+2 positions between fixed letters,
// with a self-loop on p_i at position i.
Nfa<Digit> pattern_automaton(const PatternSpec& p);

// Synchronized product over the pair alphabet: accepts { [u1; u2] : u1 in
// L(p1), u2 in L(p2) }. With require_diff, additionally requires u1 != u2 as
// words (one divergence bit).
Nfa<PairLetter> pair_pattern_automaton(const PatternSpec& p1, const PatternSpec& p2,
                                       bool require_diff);

// Equal-value acceptor for words read most-significant digit first, valid on
// equal-length tracks. For |r| > 1 this is the reversal of the equality
// automaton; for |r| < 1 the automaton for base 1/r applies directly, since
// equal-length value equality in base r is value equality of the reversed
// words in base 1/r.
Nfa<PairLetter> equal_value_acceptor_msd(const Rational& r, const std::set<BigInt>& digits);

// Reconstructs an accepting run of a pattern automaton on the word and
// converts it to the exponent tuple (m_1, ..., m_s); nullopt when rejected.
// Any accepting run yields a valid tuple.
std::optional<std::vector<unsigned long>> parse_pattern_word(const PatternSpec& p,
                                                             std::span<const Digit> word);

// Loop counts of a pattern-automaton run, as the exponent tuple (m_1, ..., m_s).
std::vector<unsigned long> run_to_exponents(const PatternSpec& p, std::span<const int> run);

std::string letter_text(const Digit& d);
std::string letter_text(const PairLetter& l);

}  // namespace utfree
