#include "latcoh/cohomology.hpp"
#include "latcoh/sampling.hpp"

#include <gtest/gtest.h>

using namespace latcoh;

namespace {

std::string h(const CyclicAction& a, int i) { return group_cohomology(a, i).structure().str(); }
std::string th(const CyclicAction& a, int i) { return tate(a, i).structure().str(); }

} // namespace

TEST(Operators, Examples) {
    const auto triv = operators(trivial_action(4, 1));
    EXPECT_EQ(triv.norm, IntegerMatrix{{4}});
    EXPECT_EQ(triv.aug, IntegerMatrix{{0}});

    const auto rot = operators(gauss_action());
    EXPECT_TRUE(rot.norm.is_zero());
    EXPECT_EQ(rot.aug, (IntegerMatrix{{-1, -1}, {1, -1}}));

    const auto one = operators(trivial_action(1, 2));
    EXPECT_TRUE(one.norm.is_identity());
    EXPECT_TRUE(one.aug.is_zero());
}

TEST(Operators, NormTimesAugmentationVanishes) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 30; ++i) {
        const CyclicAction a = random_action(rng);
        const auto ops = operators(a);
        ASSERT_TRUE((ops.norm * ops.aug).is_zero());
        ASSERT_TRUE((ops.aug * ops.norm).is_zero());
    }
}

TEST(GroupCohomology, GaussianIntegers) {
    const CyclicAction a = gauss_action();
    EXPECT_EQ(h(a, 0), "0");
    EXPECT_EQ(h(a, 1), "Z/2");
    EXPECT_EQ(h(a, 2), "0");
    EXPECT_EQ(h(a, 3), "Z/2");
}

TEST(GroupCohomology, SignAction) {
    const CyclicAction a = sign_action();
    EXPECT_EQ(h(a, 0), "0");
    EXPECT_EQ(h(a, 1), "Z/2");
    EXPECT_EQ(h(a, 2), "0");
}

TEST(GroupCohomology, TrivialCoefficients) {
    const CyclicAction a = trivial_action(6, 1);
    EXPECT_EQ(h(a, 0), "Z");
    EXPECT_EQ(h(a, 1), "0");
    EXPECT_EQ(h(a, 2), "Z/6");
    EXPECT_EQ(h(a, 4), "Z/6");
    EXPECT_THROW(group_cohomology(a, -1), usage_error);
}

TEST(Tate, Examples) {
    EXPECT_EQ(th(gauss_action(), 0), "0");
    EXPECT_EQ(th(gauss_action(), 1), "Z/2");
    EXPECT_EQ(th(trivial_action(4, 1), 0), "Z/4");
    EXPECT_EQ(th(trivial_action(4, 1), -1), "0");
    EXPECT_EQ(th(trivial_action(4, 1), -2), "Z/4");
}

TEST(Tate, RegularRepresentationIsAcyclic) {
    for (std::int64_t m : {2, 3, 4, 6}) {
        const CyclicAction reg = permutation_lattice(m, 1);
        EXPECT_EQ(th(reg, 0), "0");
        EXPECT_EQ(th(reg, 1), "0");
    }
}

TEST(Tate, ShapiroForPermutationLattices) {
    for (std::int64_t m = 1; m <= 12; ++m)
        for (std::int64_t hh = 1; hh <= m; ++hh) {
            if (m % hh != 0) continue;
            const CyclicAction a = permutation_lattice(m, hh);
            EXPECT_EQ(th(a, 0), th(trivial_action(hh, 1), 0)) << m << " " << hh;
            EXPECT_EQ(th(a, 1), "0") << m << " " << hh;
        }
}

TEST(HHat, Examples) {
    EXPECT_EQ(h_hat(trivial_action(4, 1)), Rational(4));
    EXPECT_EQ(h_hat(gauss_action()), Rational(1, 2));
    for (std::int64_t hh : {1, 2, 3, 4, 6, 12}) EXPECT_EQ(h_hat(permutation_lattice(12, hh)), Rational(hh));
}

TEST(HHat, MultiplicativeOnDirectSums) {
    const CyclicAction a = gauss_action();
    const CyclicAction b = trivial_action(4, 1);
    EXPECT_EQ(h_hat(direct_sum(a, b)), h_hat(a) * h_hat(b));
}

TEST(HomologicalEuler, Examples) {
    EXPECT_EQ(homological_euler_h(sign_action()), Rational(4));
    EXPECT_EQ(homological_euler_h(trivial_action(2, 1)), Rational(1));
    // Z[zeta_3]: j = 0 and j = 2 are trivial (h = 3 each), j = 1 has only
    // Tate H^1 = Z/3 and enters inverted.
    EXPECT_EQ(homological_euler_h(cyclotomic_lattice(3, 1)), Rational(27));
}

TEST(BarOracle, Examples) {
    EXPECT_EQ(bar_oracle(trivial_action(3, 1), 2).str(), "Z/3");
    EXPECT_EQ(bar_oracle(gauss_action(), 1).str(), "Z/2");
    EXPECT_EQ(bar_oracle(paper_example_3(), 0), group_cohomology(paper_example_3(), 0).structure());
    EXPECT_THROW(bar_oracle(gauss_action(), 4), usage_error);
}

TEST(BarOracle, AgreesWithPeriodicResolution) {
    std::mt19937_64 rng(17);
    SamplerOptions opts;
    opts.max_rank = 2;
    opts.moduli = {2, 3, 4};
    for (int trial = 0; trial < 15; ++trial) {
        const CyclicAction a = random_action(rng, opts);
        for (int i = 0; i <= 2; ++i)
            ASSERT_EQ(bar_oracle(a, i), group_cohomology(a, i).structure()) << a.matrix().str() << " i = " << i;
    }
}
