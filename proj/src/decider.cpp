#include "utfree/decider.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace utfree {

namespace {

std::vector<unsigned long> expand_over_k(unsigned long k_mask, std::size_t t,
                                         std::span<const unsigned long> exps) {
    std::vector<unsigned long> out(t, 0);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < t; ++i) {
        if (k_mask & (1ul << i)) continue;
        out[i] = exps[idx++];
    }
    assert(idx == exps.size());
    return out;
}

Witness checked(const Instance& inst, Witness w) {
    if (!verify_witness(inst, w))
        throw std::logic_error("constructed witness failed verification");
    return w;
}

// Shifts an integer difference vector to a pair of nonnegative exponent
// vectors with left - right = v.
Witness witness_from_difference(std::span<const BigInt> v) {
    Witness w;
    for (const auto& d : v) {
        if (d > 0) {
            w.left.push_back(d.convert_to<unsigned long>());
            w.right.push_back(0);
        } else {
            w.left.push_back(0);
            w.right.push_back((-d).convert_to<unsigned long>());
        }
    }
    return w;
}

}  // namespace

std::string branch_name(Branch b) {
    switch (b) {
        case Branch::SingularXT1: return "SingularX-t1";
        case Branch::SingularXTGe2: return "SingularX-tGe2";
        case Branch::AMinus1T1: return "AMinus1-t1";
        case Branch::AMinus1TGe2: return "AMinus1-tGe2";
        case Branch::A1T1: return "A1-t1";
        case Branch::A1T2: return "A1-t2";
        case Branch::A1TGe3: return "A1-tGe3";
        case Branch::MainPairCollision: return "Main-PairCollision";
        case Branch::MainSelfAmbiguity: return "Main-SelfAmbiguity";
        case Branch::MainSelfCollision: return "Main-SelfCollision";
        case Branch::MainInjective: return "Main-Injective";
        case Branch::ProblemBVacuous: return "ProblemB-Vacuous";
    }
    return "?";
}

UTMat2 Instance::image(std::span<const unsigned long> exponents) const {
    if (exponents.size() != t()) throw BadArity("exponent vector length must equal t");
    UTMat2 acc = nz[0];
    for (std::size_t i = 0; i < t(); ++i) acc = acc * pow(mx, exponents[i]) * nz[i + 1];
    return acc;
}

void Instance::validate() const {
    if (nz.size() < 2) throw UnsupportedInstance("instance needs at least t+1 = 2 z-images");
    for (std::size_t i = 0; i < nz.size(); ++i)
        if (nz[i].singular())
            throw UnsupportedInstance("mu(z_" + std::to_string(i + 1) +
                                      ") is singular; the procedure requires nonsingular z-images");
}

bool verify_witness(const Instance& inst, const Witness& w) {
    if (w.left.size() != inst.t() || w.right.size() != inst.t()) return false;
    if (w.left == w.right) return false;
    return inst.image(w.left) == inst.image(w.right);
}

Verdict branch_singular_x(const Instance& inst, SingularKind kind) {
    const std::size_t t = inst.t();
    if (t >= 2) {
        // mu(x^2 z_2 x) = mu(x z_2 x^2) since M^2 = a M for singular M.
        Witness w;
        w.left = std::vector<unsigned long>(t, 0);
        w.right = std::vector<unsigned long>(t, 0);
        w.left[0] = 2;
        w.left[1] = 1;
        w.right[0] = 1;
        w.right[1] = 2;
        return {false, Branch::SingularXTGe2, checked(inst, w)};
    }
    if (kind == SingularKind::Zero) {
        // M^2 = M^3 = 0; when M itself is zero already m=1 collides with m=2.
        for (Witness w : {Witness{{1}, {2}}, Witness{{2}, {3}}})
            if (verify_witness(inst, w)) return {false, Branch::SingularXT1, w};
        throw std::logic_error("zero-kind singular instance without witness");
    }
    const Rational diag = kind == SingularKind::BottomRowZero ? inst.mx.e11 : inst.mx.e22;
    if (diag != 1 && diag != -1) return {true, Branch::SingularXT1, std::nullopt};
    Witness w = diag == 1 ? Witness{{1}, {2}} : Witness{{1}, {3}};
    return {false, Branch::SingularXT1, checked(inst, std::move(w))};
}

Verdict branch_a_minus1(const Instance& inst, const CanonicalForm& cf) {
    const std::size_t t = inst.t();
    if (t >= 2) {
        // M^2 = c^2 I commutes: N_1 M^2 N_2 = N_1 N_2 M^2.
        Witness w;
        w.left = std::vector<unsigned long>(t, 0);
        w.right = std::vector<unsigned long>(t, 0);
        w.left[0] = 2;
        w.right[1] = 2;
        return {false, Branch::AMinus1TGe2, checked(inst, w)};
    }
    if (cf.c == 1 || cf.c == -1)
        return {false, Branch::AMinus1T1, checked(inst, Witness{{0}, {2}})};
    return {true, Branch::AMinus1T1, std::nullopt};
}

Verdict branch_a_1(const Instance& inst, const CanonicalForm& cf) {
    const std::size_t t = inst.t();
    const Rational& b = cf.b;
    const Rational& c = cf.c;
    const bool c_unit = (c == 1 || c == -1);

    if (t == 1) {
        if (!c_unit || b != 0) return {true, Branch::A1T1, std::nullopt};
        // M^m = M^n whenever c^m = c^n.
        Witness w = c == 1 ? Witness{{0}, {1}} : Witness{{0}, {2}};
        return {false, Branch::A1T1, checked(inst, std::move(w))};
    }

    if (t == 2) {
        const Rational a2 = inst.nz[1].e11;
        const Rational c2 = inst.nz[1].e22;
        if (!c_unit) {
            if (a2 * b != c2 * b) return {true, Branch::A1T2, std::nullopt};
            // The middle entry depends on m+n only.
            return {false, Branch::A1T2, checked(inst, Witness{{1, 0}, {0, 1}})};
        }
        if (a2 * b == c2 * b)
            return {false, Branch::A1T2, checked(inst, Witness{{1, 0}, {0, 1}})};
        // b != 0 here. Solve A_2 dn = -C_2 dm exactly: dn = num(C_2) den(A_2) g,
        // dm = -num(A_2) den(C_2) g, doubling when c = -1 to keep parity.
        const BigInt g = c == -1 ? 2 : 1;
        const BigInt dm = -numerator(a2) * denominator(c2) * g;
        const BigInt dn = numerator(c2) * denominator(a2) * g;
        return {false, Branch::A1T2,
                checked(inst, witness_from_difference(std::vector<BigInt>{dm, dn}))};
    }

    // t >= 3: the middle entry is affine in the exponents with coefficients
    // w_i = b * (A_1...A_i) * (C_{i+1}...C_{t+1}); any nonzero integer vector v
    // with sum v = 0 and sum w_i v_i = 0 gives a collision.
    std::vector<Rational> weights(t);
    {
        Rational left(1);
        std::vector<Rational> right_suffix(t + 2, Rational(1));
        for (std::size_t i = t + 1; i-- > 1;)
            right_suffix[i] = right_suffix[i + 1] * inst.nz[i].e22;
        for (std::size_t i = 0; i < t; ++i) {
            left *= inst.nz[i].e11;
            weights[i] = b * left * right_suffix[i + 1];
        }
    }
    std::vector<BigInt> v(t, 0);
    bool built = false;
    for (std::size_t i = 0; i < t && !built; ++i)
        for (std::size_t j = i + 1; j < t && !built; ++j)
            if (weights[i] == weights[j]) {
                v[i] = 1;
                v[j] = -1;
                built = true;
            }
    if (!built) {
        // All weights distinct: a kernel vector supported on the first three
        // coordinates, cleared of denominators.
        const Rational v1 = weights[1] - weights[2];
        const Rational v2 = weights[2] - weights[0];
        const Rational v3 = weights[0] - weights[1];
        BigInt l = lcm(lcm(denominator(v1), denominator(v2)), denominator(v3));
        v[0] = numerator(v1) * (l / denominator(v1));
        v[1] = numerator(v2) * (l / denominator(v2));
        v[2] = numerator(v3) * (l / denominator(v3));
    }
    return {false, Branch::A1TGe3, checked(inst, witness_from_difference(v))};
}

SubsetProblem subset_problem(const Instance& inst, const CanonicalForm& cf,
                             unsigned long k_mask) {
    SubsetProblem sp;
    sp.k_mask = k_mask;
    sp.t = inst.t();
    sp.collapsed.push_back(inst.nz[0]);
    for (std::size_t i = 1; i <= sp.t; ++i) {
        if (k_mask & (1ul << (i - 1)))
            sp.collapsed.back() = sp.collapsed.back() * inst.nz[i];
        else
            sp.collapsed.push_back(inst.nz[i]);
    }
    sp.s = sp.collapsed.size() - 1;
    if (sp.s >= 1) sp.seq = digit_sequence(cf, sp.collapsed);
    return sp;
}

PairOutcome check_pair(const SubsetProblem& pa, const SubsetProblem& pb, bool same) {
    if (pa.s == 0 && pb.s == 0)
        return {Branch::MainInjective, std::nullopt};  // one word on each side
    if (pa.s == 0 || pb.s == 0)
        return {Branch::ProblemBVacuous, std::nullopt};  // a^{sum k} = 1 is impossible

    const DigitSequence& sa = *pa.seq;
    const DigitSequence& sb = *pb.seq;
    const PatternSpec raw_a{sa.q, sa.p};
    const PatternSpec raw_b{sb.q, sb.p};

    if (same) {
        // Two distinct exponent tuples mapping to the same word collide
        // outright; realized as ambiguity of the pattern automaton.
        const auto amb = ambiguity_check(pattern_automaton(raw_a));
        if (amb.ambiguous) {
            const auto ka = run_to_exponents(raw_a, amb.run_a);
            const auto kb = run_to_exponents(raw_a, amb.run_b);
            Witness w{expand_over_k(pa.k_mask, pa.t, ka), expand_over_k(pb.k_mask, pb.t, kb)};
            return {Branch::MainSelfAmbiguity, std::move(w)};
        }
    }

    // The equal-value automaton wants integer digits: scale both tracks by the
    // least common denominator, which preserves value equality.
    std::vector<Rational> all_digits;
    for (const auto* seq : {&sa, &sb}) {
        all_digits.insert(all_digits.end(), seq->q.begin(), seq->q.end());
        all_digits.insert(all_digits.end(), seq->p.begin(), seq->p.end());
    }
    const BigInt d = common_denominator(all_digits);
    auto scale_spec = [&](const PatternSpec& p) {
        return PatternSpec{scale_digits(p.fixed, Rational(d)), scale_digits(p.starred, Rational(d))};
    };
    const PatternSpec spec_a = scale_spec(raw_a);
    const PatternSpec spec_b = scale_spec(raw_b);
    std::set<BigInt> digit_values;
    for (const auto* p : {&spec_a, &spec_b}) {
        for (const auto& q : p->fixed) digit_values.insert(numerator(q));
        for (const auto& q : p->starred) digit_values.insert(numerator(q));
    }

    const auto patterns = pair_pattern_automaton(spec_a, spec_b, /*require_diff=*/same);
    const auto values_equal = equal_value_acceptor_msd(sa.a, digit_values);
    const auto intersection = product(patterns, values_equal);
    const auto word = emptiness_witness(intersection);
    if (!word) return {Branch::MainInjective, std::nullopt};

    std::vector<Digit> top, bottom;
    for (const auto& l : *word) {
        top.push_back(l.top);
        bottom.push_back(l.bottom);
    }
    const auto ka = parse_pattern_word(spec_a, top);
    const auto kb = parse_pattern_word(spec_b, bottom);
    if (!ka || !kb) throw std::logic_error("intersection witness does not parse");
    Witness w{expand_over_k(pa.k_mask, pa.t, *ka), expand_over_k(pb.k_mask, pb.t, *kb)};
    return {same ? Branch::MainSelfCollision : Branch::MainPairCollision, std::move(w)};
}

Verdict decide(const Instance& inst) {
    inst.validate();
    const auto cf_or_kind = canonical_form(inst.mx);
    if (std::holds_alternative<SingularKind>(cf_or_kind))
        return branch_singular_x(inst, std::get<SingularKind>(cf_or_kind));
    const CanonicalForm& cf = std::get<CanonicalForm>(cf_or_kind);
    if (cf.a == -1) return branch_a_minus1(inst, cf);
    if (cf.a == 1) return branch_a_1(inst, cf);

    // Main algorithm: a not in {-1, 0, 1}. Split L_t into the languages
    // L_t(K) and test every unordered subset pair through the automata.
    const std::size_t t = inst.t();
    const unsigned long subsets = 1ul << t;
    std::vector<SubsetProblem> problems;
    problems.reserve(subsets);
    for (unsigned long mask = 0; mask < subsets; ++mask)
        problems.push_back(subset_problem(inst, cf, mask));

    std::optional<std::pair<Witness, Branch>> best;
    for (unsigned long m1 = 0; m1 < subsets; ++m1)
        for (unsigned long m2 = m1; m2 < subsets; ++m2) {
            PairOutcome outcome = check_pair(problems[m1], problems[m2], m1 == m2);
            if (!outcome.witness) continue;
            if (!verify_witness(inst, *outcome.witness))
                throw std::logic_error("automaton witness failed verification");
            if (!best || *outcome.witness < best->first)
                best = {std::move(*outcome.witness), outcome.branch};
        }
    if (best) return {false, best->second, std::move(best->first)};
    return {true, Branch::MainInjective, std::nullopt};
}

}  // namespace utfree
