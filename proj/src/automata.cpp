#include "utfree/automata.hpp"

#include <map>

namespace utfree {

namespace {

long floor_to_long(const BigInt& n, const BigInt& d) {
    // n, d > 0
    BigInt q = n / d;
    return q.convert_to<long>();
}

std::vector<PairLetter> pair_alphabet(const std::set<BigInt>& digits) {
    std::vector<PairLetter> letters;
    for (const auto& a : digits)
        for (const auto& b : digits) letters.push_back({Rational(a), Rational(b)});
    return letters;
}

}  // namespace

std::string letter_text(const Digit& d) { return to_string(d); }

std::string letter_text(const PairLetter& l) {
    return to_string(l.top) + "|" + to_string(l.bottom);
}

Nfa<PairLetter> equality_automaton(const Base& r, const std::set<BigInt>& digits) {
    if (rational_abs(r.r) <= 1)
        throw BadBase("equality automaton requires |r| > 1, got " + to_string(r.r));

    BigInt max_abs = 0;
    for (const auto& d : digits)
        if (abs(d) > max_abs) max_abs = abs(d);
    const BigInt m = max_abs + 1;

    // d = (2m-2)/(|r|-1); states are the integers of [-d, d].
    const Rational bound = Rational(2 * (m - 1)) / (rational_abs(r.r) - 1);
    const long dmax = floor_to_long(numerator(bound), denominator(bound));

    Nfa<PairLetter> nfa(pair_alphabet(digits));
    std::map<long, int> state_of;
    for (long i = -dmax; i <= dmax; ++i)
        state_of[i] = nfa.add_state("q" + std::to_string(i), i == 0, i == 0);

    for (long i = -dmax; i <= dmax; ++i)
        for (const auto& a : digits)
            for (const auto& b : digits) {
                // q_i --(a,b)--> q_j iff i + a - b = r*j with j an integer in range.
                const BigInt n = BigInt(i) + a - b;
                if (n % r.u != 0) continue;
                const BigInt j = (n / r.u) * r.v;
                if (abs(j) > dmax) continue;
                nfa.add_transition(state_of.at(i), {Rational(a), Rational(b)},
                                   state_of.at(j.convert_to<long>()));
            }
    return nfa;
}

Nfa<Digit> pattern_automaton(const PatternSpec& p) {
    const std::size_t s = p.starred.size();
    std::vector<Digit> letters(p.fixed.begin(), p.fixed.end());
    letters.insert(letters.end(), p.starred.begin(), p.starred.end());
    Nfa<Digit> nfa(std::move(letters));
    for (std::size_t i = 0; i <= s + 1; ++i)
        nfa.add_state(std::to_string(i), i == 0, i == s + 1);
    for (std::size_t i = 0; i <= s; ++i)
        nfa.add_transition(static_cast<int>(i), p.fixed[i], static_cast<int>(i + 1));
    for (std::size_t i = 1; i <= s; ++i)
        nfa.add_transition(static_cast<int>(i), p.starred[i - 1], static_cast<int>(i));
    return nfa;
}

Nfa<PairLetter> pair_pattern_automaton(const PatternSpec& p1, const PatternSpec& p2,
                                       bool require_diff) {
    std::set<Digit> digit_set;
    for (const auto& d : p1.fixed) digit_set.insert(d);
    for (const auto& d : p1.starred) digit_set.insert(d);
    for (const auto& d : p2.fixed) digit_set.insert(d);
    for (const auto& d : p2.starred) digit_set.insert(d);
    std::vector<PairLetter> letters;
    for (const auto& a : digit_set)
        for (const auto& b : digit_set) letters.push_back({a, b});

    const Nfa<Digit> a1 = pattern_automaton(p1);
    const Nfa<Digit> a2 = pattern_automaton(p2);
    const int flags = require_diff ? 2 : 1;

    Nfa<PairLetter> out(std::move(letters));
    // State encoding: ((i * |states2| + j) * flags + f).
    const int n1 = static_cast<int>(a1.state_count());
    const int n2 = static_cast<int>(a2.state_count());
    auto encode = [&](int i, int j, int f) { return (i * n2 + j) * flags + f; };
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j)
            for (int f = 0; f < flags; ++f)
                out.add_state(a1.label(i) + "," + a2.label(j) + (require_diff && f ? ",!=" : ""),
                              a1.is_initial(i) && a2.is_initial(j) && f == 0,
                              a1.is_accepting(i) && a2.is_accepting(j) &&
                                  (!require_diff || f == 1));
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j)
            for (std::size_t li = 0; li < out.alphabet_size(); ++li) {
                const PairLetter& l = out.letter(li);
                std::vector<int> tops, bottoms;
                try {
                    tops = a1.successors(i, a1.letter_index(l.top));
                } catch (const AlphabetMismatch&) {
                    continue;
                }
                try {
                    bottoms = a2.successors(j, a2.letter_index(l.bottom));
                } catch (const AlphabetMismatch&) {
                    continue;
                }
                const bool diff = !(l.top == l.bottom);
                for (int ti : tops)
                    for (int tj : bottoms)
                        for (int f = 0; f < flags; ++f)
                            out.add_transition(encode(i, j, f), l,
                                               encode(ti, tj, flags == 2 ? (f | diff) : 0));
            }
    return out;
}

Nfa<PairLetter> equal_value_acceptor_msd(const Rational& r, const std::set<BigInt>& digits) {
    Base base(r);
    if (rational_abs(r) > 1) return reverse(equality_automaton(base, digits));
    // For |r| < 1, equal-length value equality in base r is value equality of
    // the reversed tracks in base 1/r, which is exactly what the automaton for
    // base 1/r accepts without reversal.
    return equality_automaton(Base(Rational(1) / r), digits);
}

std::optional<std::vector<unsigned long>> parse_pattern_word(const PatternSpec& p,
                                                             std::span<const Digit> word) {
    const std::size_t s = p.starred.size();
    const std::size_t states = s + 2;
    // pred[k][state]: predecessor state before reading word[k-1], or -1.
    std::vector<std::vector<int>> pred(word.size() + 1, std::vector<int>(states, -1));
    std::vector<std::vector<bool>> alive(word.size() + 1, std::vector<bool>(states, false));
    alive[0][0] = true;
    for (std::size_t k = 0; k < word.size(); ++k)
        for (std::size_t st = 0; st < states; ++st) {
            if (!alive[k][st]) continue;
            if (st <= s && word[k] == p.fixed[st] && !alive[k + 1][st + 1]) {
                alive[k + 1][st + 1] = true;
                pred[k + 1][st + 1] = static_cast<int>(st);
            }
            if (st >= 1 && st <= s && word[k] == p.starred[st - 1] && !alive[k + 1][st]) {
                alive[k + 1][st] = true;
                pred[k + 1][st] = static_cast<int>(st);
            }
        }
    if (!alive[word.size()][s + 1]) return std::nullopt;
    std::vector<int> run(word.size() + 1);
    run[word.size()] = static_cast<int>(s + 1);
    for (std::size_t k = word.size(); k > 0; --k) run[k - 1] = pred[k][run[k]];
    return run_to_exponents(p, run);
}

std::vector<unsigned long> run_to_exponents(const PatternSpec& p, std::span<const int> run) {
    const std::size_t s = p.starred.size();
    std::vector<unsigned long> loops(s + 2, 0);
    for (std::size_t k = 0; k + 1 < run.size(); ++k)
        if (run[k] == run[k + 1]) ++loops[run[k]];
    // p_i loops at state i and repeats m_{s+1-i} - 1 times.
    std::vector<unsigned long> exps(s);
    for (std::size_t j = 1; j <= s; ++j) exps[j - 1] = loops[s + 1 - j] + 1;
    return exps;
}

}  // namespace utfree
