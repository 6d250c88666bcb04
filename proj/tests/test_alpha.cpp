#include "latcoh/alpha.hpp"
#include "latcoh/sampling.hpp"

#include <gtest/gtest.h>

using namespace latcoh;

namespace {

FreeWord word(std::size_t rank, std::initializer_list<std::pair<std::size_t, int>> letters) {
    std::vector<Letter> ls;
    for (auto [g, e] : letters)
        for (int k = 0; k < std::abs(e); ++k) ls.push_back({g, e > 0 ? 1 : -1});
    return FreeWord(rank, ls);
}

FreeWord commutator(const FreeWord& a, const FreeWord& b) {
    return word_multiply(word_multiply(word_multiply(a, b), word_invert(a)), word_invert(b));
}

} // namespace

TEST(FreeWords, MultiplyInvertReduce) {
    EXPECT_EQ(word_multiply(word(3, {{0, 1}, {1, 1}}), word(3, {{1, -1}, {2, 1}})), word(3, {{0, 1}, {2, 1}}));
    EXPECT_EQ(word_invert(word(3, {{0, 1}, {1, 1}})), word(3, {{1, -1}, {0, -1}}));
    EXPECT_TRUE(word_reduce(word(3, {{0, 1}, {0, -1}})).empty());
}

TEST(Lift, ObstructedExample) {
    const FreeEndomorphism f = canonical_lift(paper_example_3());
    EXPECT_EQ(f.images()[0], word(3, {{1, 1}}));
    EXPECT_EQ(f.images()[1], word(3, {{0, -1}}));
    EXPECT_EQ(f.images()[2], word(3, {{0, 1}, {2, 1}}));
    EXPECT_EQ(f.abelianization(), paper_example_3().inverse_matrix());
}

TEST(Lift, IdentityAndRotation) {
    const FreeEndomorphism id = canonical_lift(trivial_action(3, 2));
    EXPECT_EQ(id.images()[0], FreeWord::generator(2, 0));
    EXPECT_EQ(id.images()[1], FreeWord::generator(2, 1));
    const FreeEndomorphism rot = canonical_lift(gauss_action());
    // Columns of A^{-1} = [[0, 1], [-1, 0]].
    EXPECT_EQ(rot.images()[0], word(2, {{1, -1}}));
    EXPECT_EQ(rot.images()[1], word(2, {{0, 1}}));
}

TEST(Lift, BothOrdersAbelianizeCorrectly) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 20; ++i) {
        const CyclicAction a = random_action(rng);
        EXPECT_EQ(canonical_lift(a, LiftOrder::ascending).abelianization(), a.inverse_matrix());
        EXPECT_EQ(canonical_lift(a, LiftOrder::descending).abelianization(), a.inverse_matrix());
    }
}

TEST(Iterate, ObstructedExampleFourthPower) {
    const FreeEndomorphism f = canonical_lift(paper_example_3());
    const FreeWord x3 = FreeWord::generator(3, 2);
    EXPECT_EQ(endo_iterate_apply(f, 4, x3), word(3, {{1, -1}, {0, -1}, {1, 1}, {0, 1}, {2, 1}}));
    EXPECT_EQ(endo_iterate_apply(f, 0, x3), x3);
    const FreeEndomorphism id = canonical_lift(trivial_action(2, 3));
    EXPECT_EQ(endo_iterate_apply(id, 7, x3), x3);
}

TEST(Iterate, WordCapIsEnforced) {
    const FreeEndomorphism f = canonical_lift(paper_example_3());
    EXPECT_THROW(endo_iterate_apply(f, 4, FreeWord::generator(3, 2), 3), resource_error);
    EXPECT_EQ(endo_iterate_apply(f, 4, FreeWord::generator(3, 2), 5).length(), 5u);
}

TEST(Magnus, Examples) {
    const MagnusTruncation c = magnus(commutator(FreeWord::generator(3, 0), FreeWord::generator(3, 1)));
    EXPECT_EQ(c.linear, (IntegerVector{0, 0, 0}));
    EXPECT_EQ(c.quadratic(0, 1), 1);
    EXPECT_EQ(c.quadratic(1, 0), -1);

    const MagnusTruncation sq = magnus(word(2, {{0, 2}}));
    EXPECT_EQ(sq.linear, (IntegerVector{2, 0}));
    EXPECT_EQ(sq.quadratic(0, 0), 1);

    const MagnusTruncation e = magnus(FreeWord(2, {}));
    EXPECT_TRUE(is_zero_vector(e.linear));
    EXPECT_TRUE(e.quadratic.is_zero());
}

TEST(Magnus, IsMultiplicative) {
    // M(uv) = M(u) M(v) truncated: linear parts add, quadratic picks up u_i v_j.
    const FreeWord u = word(3, {{0, 1}, {2, -1}, {1, 2}});
    const FreeWord v = word(3, {{2, 1}, {0, -3}});
    const MagnusTruncation mu = magnus(u), mv = magnus(v), muv = magnus(word_multiply(u, v));
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(muv.linear[i], mu.linear[i] + mv.linear[i]);
        for (std::size_t j = 0; j < 3; ++j)
            EXPECT_EQ(muv.quadratic(i, j), mu.quadratic(i, j) + mv.quadratic(i, j) + mu.linear[i] * mv.linear[j]);
    }
}

TEST(LowerCentralSeries, Examples) {
    const FreeWord x1 = FreeWord::generator(3, 0), x2 = FreeWord::generator(3, 1);
    EXPECT_EQ(lcs_class(commutator(x1, x2)), (IntegerVector{1, 0, 0}));
    EXPECT_EQ(lcs_class(commutator(word_invert(x2), word_invert(x1))), (IntegerVector{-1, 0, 0}));
    EXPECT_EQ(lcs_class(FreeWord(3, {})), (IntegerVector{0, 0, 0}));
    EXPECT_THROW(lcs_class(x1), contract_violation);
}

TEST(Alpha, ObstructedExample) {
    const AlphaData d = compute_alpha(paper_example_3());
    EXPECT_EQ(d.delta, (IntegerMatrix{{0, 0, -1}, {0, 0, 0}, {0, 0, 0}}));
    EXPECT_EQ(d.alpha1_wedge, (IntegerMatrix{{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}));
    EXPECT_EQ(d.witnesses[2], word(3, {{1, -1}, {0, -1}, {1, 1}, {0, 1}}));
}

TEST(Alpha, VanishesForTrivialAndPermutationLattices) {
    EXPECT_TRUE(compute_alpha(trivial_action(4, 3)).delta.is_zero());
    for (auto [m, h] : std::vector<std::pair<int, int>>{{4, 1}, {6, 2}, {6, 1}, {12, 3}})
        EXPECT_TRUE(compute_alpha(permutation_lattice(m, h)).delta.is_zero()) << m << " " << h;
}

TEST(Alpha, SignOption) {
    AlphaOptions plus;
    plus.sign = 1;
    const AlphaData d = compute_alpha(paper_example_3(), plus);
    EXPECT_EQ(d.alpha1_wedge, d.delta);
    plus.sign = 2;
    EXPECT_THROW(compute_alpha(paper_example_3(), plus), usage_error);
}

TEST(AlphaS, LeibnizRule) {
    // alpha_{p+q}(u ^ v) = alpha_p(u) ^ v + (-1)^p u ^ alpha_q(v)
    const AlphaData d = compute_alpha(paper_example_6());
    const std::size_t n = d.rank;
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t p = 1 + rng() % 2, q = 1 + rng() % 2;
        IntegerVector u(binomial(n, p)), v(binomial(n, q));
        for (auto& x : u) x = dist(rng);
        for (auto& x : v) x = dist(rng);
        const IntegerMatrix ap = alpha_s_wedge(d, p), aq = alpha_s_wedge(d, q), apq = alpha_s_wedge(d, p + q);
        const IntegerVector lhs = (apq * IntegerMatrix::column(wedge(n, p, u, q, v))).col(0);
        IntegerVector rhs = wedge(n, p + 1, (ap * IntegerMatrix::column(u)).col(0), q, v);
        const IntegerVector second = wedge(n, p, u, q + 1, (aq * IntegerMatrix::column(v)).col(0));
        for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += (p % 2 == 0 ? 1 : -1) * second[i];
        ASSERT_EQ(lhs, rhs);
    }
}

TEST(AlphaS, EndDegreesVanish) {
    const AlphaData d = compute_alpha(paper_example_3());
    EXPECT_TRUE(alpha_s_wedge(d, 0).is_zero());
    EXPECT_TRUE(alpha_s_wedge(d, 3).is_zero());
    EXPECT_EQ(alpha_s_wedge(d, 1), d.alpha1_wedge);
}

TEST(Obstruction, Examples) {
    EXPECT_TRUE(obstruction_nonzero(paper_example_3()));
    EXPECT_TRUE(obstruction_nonzero(paper_example_6()));
    EXPECT_FALSE(obstruction_nonzero(permutation_lattice(4, 1)));
    EXPECT_FALSE(obstruction_nonzero(trivial_action(2, 2)));
    for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {5, 1}, {2, 3}})
        EXPECT_FALSE(obstruction_nonzero(cyclotomic_lattice(p, r))) << p << " " << r;
}

TEST(Obstruction, LiftIndependent) {
    std::mt19937_64 rng(12);
    AlphaOptions desc;
    desc.order = LiftOrder::descending;
    for (int i = 0; i < 25; ++i) {
        const CyclicAction a = random_action(rng);
        ASSERT_EQ(obstruction_nonzero(a), obstruction_nonzero(a, desc)) << a.matrix().str();
    }
}

TEST(Pairing, InvariantWitness) {
    const CyclicAction a = paper_example_3();
    const AlphaData d = compute_alpha(a);
    EXPECT_EQ(pairing_value(a, d, paper_example_3_witness()), 2);
    EXPECT_EQ(pairing_value(a, d, IntegerVector(9)), 0);
    IntegerVector bad(9);
    bad[0] = 1;
    EXPECT_THROW(pairing_value(a, d, bad), contract_violation);
}

TEST(Pairing, PermutationLatticePairsToZero) {
    const CyclicAction a = permutation_lattice(4, 1);
    const AlphaData d = compute_alpha(a);
    const IntegerMatrix w = invariant_witnesses(a);
    ASSERT_GT(w.cols(), 0u);
    for (std::size_t c = 0; c < w.cols(); ++c) EXPECT_EQ(pairing_value(a, d, w.col(c)), 0);
}
