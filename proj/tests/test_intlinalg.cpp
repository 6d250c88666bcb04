#include "latcoh/oracles.hpp"
#include "latcoh/subquotient.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace latcoh;

namespace {

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
    return m;
}

std::vector<Integer> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

bool is_unimodular(const IntegerMatrix& u, const IntegerMatrix& u_inv) {
    return (u * u_inv).is_identity() && (u_inv * u).is_identity();
}

} // namespace

TEST(Smith, IdentityStaysIdentity) {
    const auto snf = smith_normal_form(IntegerMatrix::identity(3));
    EXPECT_TRUE(snf.D.is_identity());
    EXPECT_EQ(snf.rank, 3u);
}

TEST(Smith, TwoByTwoExample) {
    const IntegerMatrix m{{2, 4}, {6, 8}};
    const auto snf = smith_normal_form(m);
    EXPECT_EQ(snf.diagonal(), ints({2, 4}));
    EXPECT_EQ(snf.U * m * snf.V, snf.D);
    EXPECT_EQ(oracle::invariant_factors_by_minors(m), ints({2, 4}));
}

TEST(Smith, ZeroMatrix) {
    const auto snf = smith_normal_form(IntegerMatrix(2, 3));
    EXPECT_TRUE(snf.D.is_zero());
    EXPECT_EQ(snf.D.rows(), 2u);
    EXPECT_EQ(snf.D.cols(), 3u);
    EXPECT_EQ(snf.rank, 0u);
}

TEST(Smith, RandomMatricesAgreeWithMinorOracle) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t r = 1 + rng() % 4;
        const std::size_t c = 1 + rng() % 4;
        const IntegerMatrix m = random_matrix(rng, r, c, 6);
        const auto snf = smith_normal_form(m);
        ASSERT_TRUE(is_unimodular(snf.U, snf.U_inv));
        ASSERT_TRUE(is_unimodular(snf.V, snf.V_inv));
        ASSERT_EQ(snf.U * m * snf.V, snf.D);
        const auto d = snf.diagonal();
        for (std::size_t i = 0; i + 1 < snf.rank; ++i) ASSERT_EQ(d[i + 1] % d[i], 0) << m.str();
        std::vector<Integer> nonzero(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(snf.rank));
        ASSERT_EQ(nonzero, oracle::invariant_factors_by_minors(m)) << m.str();
    }
}

TEST(Smith, DeterministicOutput) {
    const IntegerMatrix m{{3, 5, 7}, {2, 4, 6}, {1, 1, 9}};
    const auto a = smith_normal_form(m);
    const auto b = smith_normal_form(m);
    EXPECT_EQ(a.U, b.U);
    EXPECT_EQ(a.V, b.V);
}

TEST(Hermite, KernelOfRankDeficientMatrix) {
    const IntegerMatrix a{{0, 1, 0}, {-1, 0, 1}, {0, 0, 1}};
    const IntegerMatrix k = kernel_basis(a - IntegerMatrix::identity(3));
    ASSERT_EQ(k.cols(), 1u);
    IntegerVector v = k.col(0);
    if (v[0] < 0)
        for (auto& x : v) x = -x;
    EXPECT_EQ(v, ints({1, 1, 2}));
}

TEST(Hermite, KernelEdgeCases) {
    EXPECT_EQ(kernel_basis(IntegerMatrix::identity(2)).cols(), 0u);
    const IntegerMatrix k = kernel_basis(IntegerMatrix(2, 2));
    EXPECT_EQ(k.cols(), 2u);
    EXPECT_EQ(std::abs(static_cast<long>(determinant(k))), 1);
}

TEST(Hermite, KernelIsSaturated) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const IntegerMatrix m = random_matrix(rng, 1 + rng() % 3, 2 + rng() % 4, 4);
        const IntegerMatrix k = kernel_basis(m);
        ASSERT_TRUE((m * k).is_zero());
        ASSERT_EQ(k.cols() + matrix_rank(m), m.cols());
        if (k.cols() == 0) continue;
        // A saturated basis has trivial cokernel torsion.
        ASSERT_TRUE(cokernel_structure(k).torsion.empty()) << m.str();
    }
}

TEST(Solve, Examples) {
    const IntegerMatrix d23{{2, 0}, {0, 3}};
    EXPECT_EQ(solve_integral(d23, ints({4, 3})), std::optional<IntegerVector>(ints({2, 1})));
    EXPECT_FALSE(solve_integral(IntegerMatrix{{2}}, ints({1})).has_value());
    const IntegerMatrix m{{2, 4}, {6, 8}};
    EXPECT_EQ(solve_integral(m, ints({2, 6})), std::optional<IntegerVector>(ints({1, 0})));
}

TEST(Solve, SolutionsAreExact) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const IntegerMatrix m = random_matrix(rng, 3, 1 + rng() % 3, 5);
        const IntegerMatrix x = random_matrix(rng, m.cols(), 1, 4);
        const IntegerVector b = (m * x).col(0);
        const auto sol = solve_integral(m, b);
        ASSERT_TRUE(sol.has_value());
        ASSERT_EQ(m * IntegerMatrix::column(*sol), IntegerMatrix::column(b));
    }
}

TEST(Subquotient, CyclicGroup) {
    EXPECT_EQ(subquotient(1, IntegerMatrix(1, 1), IntegerMatrix{{5}}).structure().str(), "Z/5");
    EXPECT_EQ(subquotient(1, IntegerMatrix(1, 1), IntegerMatrix{{4}}).structure().str(), "Z/4");
}

TEST(Subquotient, RotationQuotient) {
    const IntegerMatrix aug{{-1, -1}, {1, -1}};
    const auto sq = subquotient(2, IntegerMatrix(2, 2), aug);
    EXPECT_EQ(sq.structure().torsion, ints({2}));
    EXPECT_EQ(sq.structure().free_rank, 0u);
}

TEST(Subquotient, MatchesCokernelOfInclusion) {
    // ker X = Z^3 here, so the subquotient is the cokernel of Y.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const IntegerMatrix y = random_matrix(rng, 3, 2 + rng() % 2, 5);
        const auto sq = subquotient(3, IntegerMatrix(1, 3), y);
        ASSERT_EQ(sq.structure(), oracle::cokernel_by_minors(y)) << y.str();
    }
}

TEST(Subquotient, CoordinatesRoundTrip) {
    const IntegerMatrix y{{2, 0}, {0, 6}, {0, 0}};
    const auto sq = subquotient(3, IntegerMatrix(1, 3), y);
    EXPECT_EQ(sq.structure().str(), "Z + Z/2 + Z/6");
    const std::size_t k = sq.structure().generator_count();
    for (std::size_t j = 0; j < k; ++j) {
        IntegerVector e(k);
        e[j] = 1;
        EXPECT_EQ(sq.coordinates(sq.lift(e)), e);
    }
}

TEST(Subquotient, RejectsDenominatorOutsideNumerator) {
    EXPECT_THROW(SubquotientPresentation(2, IntegerMatrix{{1}, {0}}, IntegerMatrix{{0}, {1}}), contract_violation);
}

TEST(InducedMap, IdentityZeroAndDoubling) {
    const auto z4 = subquotient(1, IntegerMatrix(1, 1), IntegerMatrix{{4}});
    EXPECT_EQ(induced_map(IntegerMatrix::identity(1), z4, z4), IntegerMatrix{{1}});
    EXPECT_EQ(induced_map(IntegerMatrix(1, 1), z4, z4), IntegerMatrix{{0}});
    EXPECT_EQ(induced_map(IntegerMatrix{{2}}, z4, z4), IntegerMatrix{{2}});
}

TEST(InducedMap, RejectsMapsNotRespectingTheDenominator) {
    const auto z4 = subquotient(1, IntegerMatrix(1, 1), IntegerMatrix{{4}});
    const auto z6 = subquotient(1, IntegerMatrix(1, 1), IntegerMatrix{{6}});
    EXPECT_THROW(induced_map(IntegerMatrix::identity(1), z4, z6), contract_violation);
    EXPECT_EQ(induced_map(IntegerMatrix{{3}}, z4, z6), IntegerMatrix{{3}});
}

TEST(HomologyAt, ShortComplex) {
    // Z/8 --4--> Z/8 --4--> Z/8: cycles {0,2,4,6}, boundaries {0,4}.
    AbelianGroupStructure z8{0, ints({8})};
    EXPECT_EQ(homology_at(z8, IntegerMatrix{{4}}, IntegerMatrix{{4}}, z8).str(), "Z/2");
    AbelianGroupStructure z4{0, ints({4})};
    EXPECT_EQ(homology_at(z4, IntegerMatrix{{2}}, IntegerMatrix{{2}}, z4).str(), "0");
    EXPECT_EQ(homology_at(z4, IntegerMatrix(1, 0), IntegerMatrix{{1}}, z4).str(), "0");
}

TEST(Oracle, EnumeratedCokernelMatchesSmith) {
    const IntegerMatrix m{{2, 0}, {0, 4}};
    const auto counts = oracle::enumerate_cokernel(m, 8);
    ASSERT_TRUE(counts.has_value());
    EXPECT_EQ(counts->order, 8);
    const auto g = cokernel_structure(m);
    for (auto [d, c] : counts->counts) EXPECT_EQ(oracle::torsion_count(g, d), c) << "d = " << d;
}

TEST(Determinant, AgreesWithLeibniz) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const IntegerMatrix m = random_matrix(rng, 1 + trial % 5, 1 + trial % 5, 7);
        ASSERT_EQ(determinant(m), oracle::leibniz_determinant(m));
    }
}
