#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace utfree {

struct AlphabetMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Nondeterministic finite automaton over an ordered letter type. States are
// dense indices with optional display labels; immutable once built apart from
// the add_* construction calls.
template <class Letter>
class Nfa {
public:
    using State = int;

    explicit Nfa(std::vector<Letter> alphabet) : alphabet_(std::move(alphabet)) {
        std::sort(alphabet_.begin(), alphabet_.end());
        alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
    }

    State add_state(std::string label, bool initial = false, bool accepting = false) {
        states_.push_back({std::move(label), initial, accepting});
        trans_.emplace_back(alphabet_.size());
        return static_cast<State>(states_.size() - 1);
    }

    void add_transition(State from, const Letter& letter, State to) {
        trans_[from][letter_index(letter)].push_back(to);
    }

    std::size_t state_count() const { return states_.size(); }
    std::size_t alphabet_size() const { return alphabet_.size(); }
    const std::vector<Letter>& alphabet() const { return alphabet_; }
    const Letter& letter(std::size_t i) const { return alphabet_[i]; }
    const std::string& label(State s) const { return states_[s].label; }
    bool is_initial(State s) const { return states_[s].initial; }
    bool is_accepting(State s) const { return states_[s].accepting; }

    std::size_t letter_index(const Letter& l) const {
        auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), l);
        if (it == alphabet_.end() || !(*it == l))
            throw AlphabetMismatch("letter not in alphabet");
        return static_cast<std::size_t>(it - alphabet_.begin());
    }

    const std::vector<State>& successors(State s, std::size_t letter_idx) const {
        return trans_[s][letter_idx];
    }

    std::vector<State> initial_states() const {
        std::vector<State> out;
        for (State s = 0; s < static_cast<State>(states_.size()); ++s)
            if (states_[s].initial) out.push_back(s);
        return out;
    }

    // Subset-simulation membership test.
    bool accepts(const std::vector<Letter>& word) const {
        std::set<State> current;
        for (State s : initial_states()) current.insert(s);
        for (const auto& l : word) {
            auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), l);
            if (it == alphabet_.end() || !(*it == l)) return false;
            const std::size_t li = static_cast<std::size_t>(it - alphabet_.begin());
            std::set<State> next;
            for (State s : current)
                for (State t : trans_[s][li]) next.insert(t);
            current = std::move(next);
            if (current.empty()) return false;
        }
        for (State s : current)
            if (states_[s].accepting) return true;
        return false;
    }

    // Number of accepting runs on the word.
    unsigned long long count_runs(const std::vector<Letter>& word) const {
        std::vector<unsigned long long> counts(states_.size(), 0);
        for (State s : initial_states()) counts[s] = 1;
        for (const auto& l : word) {
            auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), l);
            if (it == alphabet_.end() || !(*it == l)) return 0;
            const std::size_t li = static_cast<std::size_t>(it - alphabet_.begin());
            std::vector<unsigned long long> next(states_.size(), 0);
            for (State s = 0; s < static_cast<State>(states_.size()); ++s)
                if (counts[s])
                    for (State t : trans_[s][li]) next[t] += counts[s];
            counts = std::move(next);
        }
        unsigned long long total = 0;
        for (State s = 0; s < static_cast<State>(states_.size()); ++s)
            if (states_[s].accepting) total += counts[s];
        return total;
    }

private:
    struct StateData {
        std::string label;
        bool initial = false;
        bool accepting = false;
    };
    std::vector<Letter> alphabet_;
    std::vector<StateData> states_;
    std::vector<std::vector<std::vector<State>>> trans_;
};

// Intersection over a shared alphabet; keeps reachable state pairs only and
// composes the component labels.
template <class Letter>
Nfa<Letter> product(const Nfa<Letter>& a, const Nfa<Letter>& b) {
    if (a.alphabet() != b.alphabet())
        throw AlphabetMismatch("product requires identical alphabets");
    Nfa<Letter> out(a.alphabet());
    std::map<std::pair<int, int>, int> index;
    std::deque<std::pair<int, int>> queue;
    auto intern = [&](int sa, int sb) {
        auto [it, fresh] = index.try_emplace({sa, sb}, -1);
        if (fresh) {
            it->second = out.add_state(a.label(sa) + "," + b.label(sb),
                                       a.is_initial(sa) && b.is_initial(sb),
                                       a.is_accepting(sa) && b.is_accepting(sb));
            queue.push_back({sa, sb});
        }
        return it->second;
    };
    for (int sa : a.initial_states())
        for (int sb : b.initial_states()) intern(sa, sb);
    while (!queue.empty()) {
        auto [sa, sb] = queue.front();
        queue.pop_front();
        const int from = index.at({sa, sb});
        for (std::size_t li = 0; li < out.alphabet_size(); ++li)
            for (int ta : a.successors(sa, li))
                for (int tb : b.successors(sb, li))
                    out.add_transition(from, out.letter(li), intern(ta, tb));
    }
    return out;
}

// L(reverse(A)) = reversed L(A): swaps initial/accepting and flips transitions.
template <class Letter>
Nfa<Letter> reverse(const Nfa<Letter>& a) {
    Nfa<Letter> out(a.alphabet());
    for (int s = 0; s < static_cast<int>(a.state_count()); ++s)
        out.add_state(a.label(s), a.is_accepting(s), a.is_initial(s));
    for (int s = 0; s < static_cast<int>(a.state_count()); ++s)
        for (std::size_t li = 0; li < a.alphabet_size(); ++li)
            for (int t : a.successors(s, li)) out.add_transition(t, a.letter(li), s);
    return out;
}

// Shortest accepted word, or nullopt when the language is empty. BFS with the
// sorted alphabet order makes the witness deterministic.
template <class Letter>
std::optional<std::vector<Letter>> emptiness_witness(const Nfa<Letter>& a) {
    const int n = static_cast<int>(a.state_count());
    std::vector<int> parent_state(n, -1);
    std::vector<std::size_t> parent_letter(n, 0);
    std::vector<bool> seen(n, false);
    std::deque<int> queue;
    for (int s : a.initial_states()) {
        seen[s] = true;
        queue.push_back(s);
    }
    int goal = -1;
    for (int s : a.initial_states())
        if (a.is_accepting(s)) goal = std::min(goal == -1 ? s : goal, s);
    while (goal == -1 && !queue.empty()) {
        const int s = queue.front();
        queue.pop_front();
        for (std::size_t li = 0; li < a.alphabet_size() && goal == -1; ++li)
            for (int t : a.successors(s, li)) {
                if (seen[t]) continue;
                seen[t] = true;
                parent_state[t] = s;
                parent_letter[t] = li;
                if (a.is_accepting(t)) {
                    goal = t;
                    break;
                }
                queue.push_back(t);
            }
    }
    if (goal == -1) return std::nullopt;
    std::vector<Letter> word;
    for (int s = goal; parent_state[s] != -1; s = parent_state[s])
        word.push_back(a.letter(parent_letter[s]));
    std::reverse(word.begin(), word.end());
    return word;
}

template <class Letter>
struct AmbiguityResult {
    bool ambiguous = false;
    std::vector<Letter> word;        // a word with two distinct accepting runs
    std::vector<int> run_a, run_b;   // state sequences, length |word| + 1
};

// Self-product restricted to equal letters on both tracks; the automaton is
// ambiguous iff an accepting path passes a pair (p, q) with p != q.
template <class Letter>
AmbiguityResult<Letter> ambiguity_check(const Nfa<Letter>& a) {
    struct Node {
        int p, q;
        bool diverged;
        auto operator<=>(const Node&) const = default;
    };
    std::map<Node, std::pair<Node, std::size_t>> parent;
    std::deque<Node> queue;
    auto visit = [&](const Node& node, const Node& from, std::size_t letter_idx) {
        if (parent.contains(node)) return;
        parent.emplace(node, std::make_pair(from, letter_idx));
        queue.push_back(node);
    };
    const Node root{-1, -1, false};
    for (int s : a.initial_states())
        for (int t : a.initial_states()) visit({s, t, s != t}, root, 0);
    std::optional<Node> goal;
    while (!queue.empty() && !goal) {
        const Node node = queue.front();
        queue.pop_front();
        if (node.diverged && a.is_accepting(node.p) && a.is_accepting(node.q)) {
            goal = node;
            break;
        }
        for (std::size_t li = 0; li < a.alphabet_size(); ++li)
            for (int tp : a.successors(node.p, li))
                for (int tq : a.successors(node.q, li))
                    visit({tp, tq, node.diverged || tp != tq}, node, li);
    }
    AmbiguityResult<Letter> result;
    if (!goal) return result;
    result.ambiguous = true;
    for (Node n = *goal; n.p != -1;) {
        result.run_a.push_back(n.p);
        result.run_b.push_back(n.q);
        auto [from, li] = parent.at(n);
        if (from.p != -1) result.word.push_back(a.letter(li));
        n = from;
    }
    std::reverse(result.word.begin(), result.word.end());
    std::reverse(result.run_a.begin(), result.run_a.end());
    std::reverse(result.run_b.begin(), result.run_b.end());
    return result;
}

// DOT export; letters are rendered by the supplied printer.
template <class Letter>
void write_dot(std::ostream& os, const Nfa<Letter>& a,
               const std::function<std::string(const Letter&)>& print_letter) {
    os << "digraph nfa {\n  rankdir=LR;\n";
    os << "  __start [shape=point];\n";
    for (int s = 0; s < static_cast<int>(a.state_count()); ++s) {
        os << "  s" << s << " [label=\"" << a.label(s) << "\", shape="
           << (a.is_accepting(s) ? "doublecircle" : "circle") << "];\n";
        if (a.is_initial(s)) os << "  __start -> s" << s << ";\n";
    }
    for (int s = 0; s < static_cast<int>(a.state_count()); ++s)
        for (std::size_t li = 0; li < a.alphabet_size(); ++li)
            for (int t : a.successors(s, li))
                os << "  s" << s << " -> s" << t << " [label=\""
                   << print_letter(a.letter(li)) << "\"];\n";
    os << "}\n";
}

}  // namespace utfree
