#include <random>

#include <gtest/gtest.h>

#include "hypercf/hypercf.hpp"

using namespace hypercf;

class PoissonByGenus : public ::testing::TestWithParam<int> {};

TEST_P(PoissonByGenus, StructureChecks) {
    const int g = GetParam();
    std::mt19937_64 rng(40 + static_cast<std::uint64_t>(g));
    std::vector<Rational> roots;
    auto p = random_lax_point(g, rng, true, &roots);
    EXPECT_EQ(p.coordinates().size(), lax_dimension(g));
    EXPECT_EQ(lax_dimension(g), static_cast<std::size_t>(3 * g + 2));
    EXPECT_TRUE(jacobi_check(p).ok());
    EXPECT_TRUE(casimir_check(p).ok());
    EXPECT_TRUE(rank_check(p).ok());
    EXPECT_TRUE(canonical_pairs_check(p, roots).ok());
    std::vector<Rational> spectral{Rational(1, 2), Rational(-3), Rational(2)};
    EXPECT_TRUE(hamiltonian_involution(p, spectral).ok());
}

// Antisymmetry checked on the raw matrix.
TEST_P(PoissonByGenus, MatrixAntisymmetric) {
    std::mt19937_64 rng(50);
    auto p = random_lax_point(GetParam(), rng);
    auto m = lax_poisson_matrix(p);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) EXPECT_EQ(m(i, j), -m(j, i));
}

// The step keeps F = P^2 + QR, recomputed from the image polynomials.
TEST_P(PoissonByGenus, StepIsIsospectral) {
    std::mt19937_64 rng(60);
    int done = 0;
    while (done < 3) {
        auto p = random_lax_point(GetParam(), rng);
        try {
            auto q = bt_step(p);
            EXPECT_EQ(q.F(), p.F());
            EXPECT_TRUE(poisson_map_check(p, Rational(2), Rational(-1, 3)).ok());
            ++done;
        } catch (const InvalidCurve&) {
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Genera, PoissonByGenus, ::testing::Values(1, 2, 3));

TEST(Poisson, FromExpansion) {
    auto cs = genus2_sextic_example();
    auto s = ExpansionState::validate(cs.curve, cs.seed).forward();
    auto p = LaxPoint::from_expansion(s);
    EXPECT_EQ(p.F(), cs.curve->F);
    EXPECT_TRUE(casimir_check(p).ok());
}

TEST(Poisson, BracketDegreeBelowGenus) {
    std::mt19937_64 rng(70);
    auto p = random_lax_point(3, rng);
    EXPECT_TRUE(bracket_degree_check(p, Rational(5, 2)).ok());
    EXPECT_TRUE(lax_form_check(p, Rational(1), Rational(-2)).ok());
}
