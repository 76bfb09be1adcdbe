#include "utfree/decider.hpp"
#include "utfree/oracle.hpp"

#include <doctest.h>

#include "support.hpp"

#include <random>

using namespace utfree;
using test_support::instance;
using test_support::m2;
using test_support::q;

namespace {

const UTMat2 I = UTMat2::identity();

Verdict expect_collision(const Instance& inst, Branch branch) {
    const Verdict v = decide(inst);
    CHECK(!v.injective);
    CHECK(v.branch == branch);
    REQUIRE(v.witness);
    CHECK(verify_witness(inst, *v.witness));
    return v;
}

}  // namespace

TEST_CASE("instance plumbing") {
    const Instance inst = instance(m2("3", "0", "1"), {I, m2("2", "1", "3"), I});
    CHECK(inst.t() == 2);
    CHECK(inst.image(std::vector<unsigned long>{1, 2}) ==
          inst.nz[0] * inst.mx * inst.nz[1] * inst.mx * inst.mx * inst.nz[2]);
    CHECK_THROWS_AS(inst.image(std::vector<unsigned long>{1}), BadArity);
    CHECK_NOTHROW(inst.validate());

    const Instance bad = instance(I, {I, m2("0", "1", "1")});
    CHECK_THROWS_AS(bad.validate(), UnsupportedInstance);
    CHECK_THROWS_AS(decide(bad), UnsupportedInstance);
    CHECK_THROWS_AS(instance(I, {I}).validate(), UnsupportedInstance);
}

TEST_CASE("branch names") {
    CHECK(branch_name(Branch::SingularXT1) == "SingularX-t1");
    CHECK(branch_name(Branch::MainPairCollision) == "Main-PairCollision");
    CHECK(branch_name(Branch::ProblemBVacuous) == "ProblemB-Vacuous");
}

TEST_CASE("verify_witness") {
    const Instance inst = instance(I, {I, I});  // everything collides
    CHECK(verify_witness(inst, Witness{{0}, {1}}));
    CHECK(!verify_witness(inst, Witness{{1}, {1}}));
    CHECK(!verify_witness(inst, Witness{{1}, {0, 1}}));
}

TEST_CASE("injective main-branch fixture") {
    // mu(x) = [[3,0],[0,1]], mu(z_2) = [[2,1],[0,3]], identity flanks.
    const Instance inst = instance(m2("3", "0", "1"), {I, m2("2", "1", "3"), I});
    const Verdict v = decide(inst);
    CHECK(v.injective);
    CHECK(v.branch == Branch::MainInjective);
    CHECK(!v.witness);
    // Independent corroboration within a bound.
    CHECK(!search_collisions(inst, 6).found);
}

TEST_CASE("singular mu(x) branches") {
    // t >= 2: x^2 z_2 x and x z_2 x^2 collide for any singular mu(x).
    const Instance t2 = instance(m2("1", "1", "0"), {I, m2("2", "1", "3"), I});
    const Verdict v = expect_collision(t2, Branch::SingularXTGe2);
    CHECK(v.witness->left == std::vector<unsigned long>{2, 1});
    CHECK(v.witness->right == std::vector<unsigned long>{1, 2});

    const Instance t3 = instance(m2("0", "2", "5"), {I, I, m2("1", "0", "2"), I});
    expect_collision(t3, Branch::SingularXTGe2);

    // t = 1: injective exactly when the nonzero diagonal entry avoids {-1,0,1}.
    CHECK(decide(instance(m2("2", "5", "0"), {I, I})).injective);
    CHECK(decide(instance(m2("0", "5", "-3"), {I, I})).injective);
    expect_collision(instance(m2("1", "5", "0"), {I, I}), Branch::SingularXT1);
    expect_collision(instance(m2("-1", "5", "0"), {I, I}), Branch::SingularXT1);
    expect_collision(instance(m2("0", "5", "1"), {I, I}), Branch::SingularXT1);
    // Nilpotent and zero shapes.
    expect_collision(instance(m2("0", "5", "0"), {I, I}), Branch::SingularXT1);
    expect_collision(instance(UTMat2::zero(), {I, I}), Branch::SingularXT1);
}

TEST_CASE("a = -1 branches") {
    // M^2 = c^2 I commutes with everything.
    const Instance t2 = instance(m2("-1", "0", "1"), {I, m2("2", "1", "3"), I});
    const Verdict v = expect_collision(t2, Branch::AMinus1TGe2);
    CHECK(v.witness->left == std::vector<unsigned long>{2, 0});
    CHECK(v.witness->right == std::vector<unsigned long>{0, 2});

    expect_collision(instance(m2("-1", "0", "1"), {I, I}), Branch::AMinus1T1);
    expect_collision(instance(m2("1", "2", "-1"), {I, I}), Branch::AMinus1T1);
    // c not a root of unity: powers have strictly growing determinant.
    CHECK(decide(instance(m2("-2", "0", "2"), {I, I})).injective);
    CHECK(decide(instance(m2("-2", "0", "2"), {I, I})).branch == Branch::AMinus1T1);
}

TEST_CASE("a = 1 branches") {
    // t = 1: injective iff c outside {-1,1} or b nonzero.
    CHECK(decide(instance(m2("2", "0", "2"), {I, I})).injective);
    CHECK(decide(instance(m2("1", "3", "1"), {I, I})).injective);
    {
        const Instance inst = instance(I, {I, I});
        const Verdict v = expect_collision(inst, Branch::A1T1);
        CHECK(v.witness->left == std::vector<unsigned long>{0});
        CHECK(v.witness->right == std::vector<unsigned long>{1});
    }
    expect_collision(instance(m2("-1", "0", "-1"), {I, I}), Branch::A1T1);

    // t = 2, c outside {-1,1}: injective iff A_2 b != C_2 b.
    const UTMat2 m = m2("2", "2", "2");  // c=2, a=1, b=1
    expect_collision(instance(m, {I, m2("3", "0", "3"), I}), Branch::A1T2);
    CHECK(decide(instance(m, {I, m2("3", "0", "1"), I})).injective);
    CHECK(decide(instance(m, {I, m2("3", "0", "1"), I})).branch == Branch::A1T2);
    // b = 0 makes the middle entry depend on m+n only.
    expect_collision(instance(m2("2", "0", "2"), {I, m2("3", "1", "5"), I}), Branch::A1T2);

    // t = 2, c = 1 or -1: never injective; the witness needs the exact
    // solution of A_2 dm + C_2 dn = 0 (doubled for parity when c = -1).
    expect_collision(instance(m2("1", "1", "1"), {I, m2("3", "0", "1"), I}), Branch::A1T2);
    expect_collision(instance(m2("-1", "-1", "-1"), {I, m2("3", "0", "1"), I}), Branch::A1T2);
    expect_collision(instance(m2("-1", "-1", "-1"), {I, m2("1/2", "1", "-3"), I}),
                     Branch::A1T2);

    // t >= 3 is never injective.
    expect_collision(instance(m, {I, m2("1", "0", "2"), m2("1", "0", "2"), I}),
                     Branch::A1TGe3);
    // Equal weights shortcut (all z-images the identity).
    expect_collision(instance(m2("1", "1", "1"), {I, I, I, I}), Branch::A1TGe3);
    // Distinct fractional weights force the kernel-vector path.
    expect_collision(
        instance(m2("1", "1", "1"), {I, m2("1/2", "0", "3"), m2("2", "1", "1/2"), m2("5", "0", "1"), I}),
        Branch::A1TGe3);
}

TEST_CASE("subset problems collapse the z-images") {
    const Instance inst = instance(m2("2", "1", "1"), {m2("1", "1", "1"), m2("2", "1", "3"),
                                                       m2("1", "0", "2")});
    const auto cf = std::get<CanonicalForm>(canonical_form(inst.mx));

    const SubsetProblem none = subset_problem(inst, cf, 0b00);
    CHECK(none.s == 2);
    CHECK(none.collapsed == inst.nz);
    REQUIRE(none.seq);
    CHECK(none.seq->s == 2);

    const SubsetProblem first = subset_problem(inst, cf, 0b01);
    CHECK(first.s == 1);
    CHECK(first.collapsed == std::vector<UTMat2>{inst.nz[0] * inst.nz[1], inst.nz[2]});

    const SubsetProblem all = subset_problem(inst, cf, 0b11);
    CHECK(all.s == 0);
    CHECK(all.collapsed == std::vector<UTMat2>{inst.nz[0] * inst.nz[1] * inst.nz[2]});
    CHECK(!all.seq);

    // The collapsed product never depends on K.
    for (unsigned long mask = 0; mask < 4; ++mask) {
        const auto sp = subset_problem(inst, cf, mask);
        UTMat2 prod = sp.collapsed[0];
        for (std::size_t i = 1; i < sp.collapsed.size(); ++i) prod = prod * sp.collapsed[i];
        CHECK(prod == inst.nz[0] * inst.nz[1] * inst.nz[2]);
    }
}

TEST_CASE("subset decomposition covers every bounded word") {
    // For each exponent vector, dropping its zero positions through the
    // collapsed matrices reproduces the image.
    std::mt19937 rng(2024);
    for (std::size_t t = 1; t <= 3; ++t) {
        Instance inst;
        inst.mx = m2("2", "1", "3");
        for (std::size_t i = 0; i <= t; ++i)
            inst.nz.push_back(test_support::random_nonsingular(rng));
        const auto cf = std::get<CanonicalForm>(canonical_form(inst.mx));

        std::vector<unsigned long> exps(t, 0);
        while (true) {
            unsigned long mask = 0;
            std::vector<unsigned long> positive;
            for (std::size_t i = 0; i < t; ++i) {
                if (exps[i] == 0)
                    mask |= 1ul << i;
                else
                    positive.push_back(exps[i]);
            }
            const SubsetProblem sp = subset_problem(inst, cf, mask);
            UTMat2 via_collapsed = sp.collapsed[0];
            for (std::size_t i = 0; i < positive.size(); ++i)
                via_collapsed = via_collapsed * pow(inst.mx, positive[i]) * sp.collapsed[i + 1];
            CHECK(via_collapsed == inst.image(exps));

            std::size_t pos = t;
            while (pos > 0 && exps[pos - 1] == 2) exps[--pos] = 0;
            if (pos == 0) break;
            ++exps[pos - 1];
        }
    }
}

TEST_CASE("check_pair handles the degenerate subset sizes") {
    const Instance inst = instance(m2("3", "0", "1"), {I, m2("2", "1", "3"), I});
    const auto cf = std::get<CanonicalForm>(canonical_form(inst.mx));
    const SubsetProblem empty_k = subset_problem(inst, cf, 0b00);
    const SubsetProblem full_k = subset_problem(inst, cf, 0b11);

    const PairOutcome both_zero = check_pair(full_k, full_k, true);
    CHECK(both_zero.branch == Branch::MainInjective);
    CHECK(!both_zero.witness);

    // One side a single word: a^{sum} = 1 is impossible, so Problem B is empty.
    for (const auto& [pa, pb] : {std::pair{full_k, empty_k}, std::pair{empty_k, full_k}}) {
        const PairOutcome vacuous = check_pair(pa, pb, false);
        CHECK(vacuous.branch == Branch::ProblemBVacuous);
        CHECK(!vacuous.witness);
    }

    // The injective fixture stays collision-free on the diagonal pair.
    const PairOutcome self = check_pair(empty_k, empty_k, true);
    CHECK(self.branch == Branch::MainInjective);
    CHECK(!self.witness);
}

TEST_CASE("check_pair detects ambiguity when p1 = q2 = p2") {
    // mu(z_2) = 2I collapses the middle digits to (0,2,2)/(2,2): the word
    // depends only on m1+m2.
    const Instance inst = instance(m2("2", "1", "1"), {I, m2("2", "0", "2"), I});
    const auto cf = std::get<CanonicalForm>(canonical_form(inst.mx));
    const SubsetProblem sp = subset_problem(inst, cf, 0b00);
    REQUIRE(sp.seq);
    CHECK(sp.seq->q == std::vector<Rational>{q("0"), q("2"), q("2")});
    CHECK(sp.seq->p == std::vector<Rational>{q("2"), q("2")});

    const PairOutcome outcome = check_pair(sp, sp, true);
    CHECK(outcome.branch == Branch::MainSelfAmbiguity);
    REQUIRE(outcome.witness);
    CHECK(verify_witness(inst, *outcome.witness));

    // Cross-checked against the brute-force tuple search.
    CHECK(tuple_collision_bruteforce(*sp.seq, 4));
}

TEST_CASE("check_pair finds same-subset collisions between distinct words") {
    // Synthetic digits with an unambiguous pattern but a genuine value
    // collision in base 2: 1 2 -2 1 and 1 0 2 1 both evaluate to 13.
    DigitSequence seq;
    seq.s = 2;
    seq.q = {q("1"), q("2"), q("1")};
    seq.p = {q("0"), q("-2")};
    seq.d1 = seq.d2 = seq.c = q("1");
    seq.a = q("2");
    SubsetProblem sp;
    sp.k_mask = 0;
    sp.t = 2;
    sp.s = 2;
    sp.seq = seq;

    const PairOutcome outcome = check_pair(sp, sp, true);
    CHECK(outcome.branch == Branch::MainSelfCollision);
    REQUIRE(outcome.witness);
    const Witness& w = *outcome.witness;
    CHECK(w.left != w.right);
    CHECK(value_of(instantiate_word(seq, w.left), seq.a) ==
          value_of(instantiate_word(seq, w.right), seq.a));
    CHECK(instantiate_word(seq, w.left) != instantiate_word(seq, w.right));
}

TEST_CASE("cross-subset collision through commuting z-images") {
    // mu(z_2) commutes with mu(x), so x z_2 and z_2 x coincide.
    const Instance inst = instance(m2("2", "0", "1"), {I, m2("3", "0", "1"), I});
    const Verdict v = expect_collision(inst, Branch::MainPairCollision);
    CHECK(v.witness->left == std::vector<unsigned long>{0, 1});
    CHECK(v.witness->right == std::vector<unsigned long>{1, 0});
}

TEST_CASE("main branch with fractional base stays injective") {
    const Instance inst =
        instance(m2("3/2", "1", "1"), {m2("1", "1", "1"), m2("2", "1", "3"), m2("1", "0", "2")});
    const Verdict v = decide(inst);
    CHECK(v.injective);
    CHECK(!search_collisions(inst, 6).found);
}

TEST_CASE("decider agrees with the bounded oracle on random instances") {
    std::mt19937 rng(60221023);
    std::uniform_int_distribution<std::size_t> t_dist(1, 3);
    int collisions = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Instance inst;
        inst.mx = {test_support::random_entry(rng, true), test_support::random_entry(rng, true),
                   test_support::random_entry(rng, true)};
        const std::size_t t = t_dist(rng);
        for (std::size_t i = 0; i <= t; ++i)
            inst.nz.push_back(test_support::random_nonsingular(rng));

        const Verdict v = decide(inst);
        const CollisionReport oracle = search_collisions(inst, 5);
        if (v.injective) {
            CHECK(!oracle.found);
        } else {
            ++collisions;
            REQUIRE(v.witness);
            CHECK(verify_witness(inst, *v.witness));
        }
    }
    CHECK(collisions > 0);  // the sample is not vacuous
}
