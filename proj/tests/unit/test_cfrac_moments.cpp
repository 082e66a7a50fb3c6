#include <random>

#include <gtest/gtest.h>

#include "hypercf/hypercf.hpp"

using namespace hypercf;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST(Expansion, SeedValidation) {
    auto cs = genus1_quartic_example();
    EXPECT_NO_THROW(ExpansionState::validate(cs.curve, cs.seed));
    SeedLine bad = cs.seed;
    bad.Q0 = Poly{Rational(1), Rational(3)};  // does not divide F - P0^2
    EXPECT_THROW(ExpansionState::validate(cs.curve, bad), InvalidSeed);
    bad = cs.seed;
    bad.P0 = Poly{Rational(0), Rational(1)};
    EXPECT_THROW(ExpansionState::validate(cs.curve, bad), InvalidSeed);
}

TEST(Expansion, CurveShapeChecked) {
    // A must be monic of degree g+1 without an X^g term.
    EXPECT_THROW(CurveSpec::make(1, Poly{Rational(1), Rational(1), Rational(1)}, Poly{Rational(1), Rational(1)}),
                 InvalidCurve);
    EXPECT_THROW(CurveSpec::make(1, Poly{Rational(1), Rational(0), Rational(1)}, Poly{Rational(1)}), InvalidCurve);
    EXPECT_NO_THROW(CurveSpec::make(1, Poly{Rational(1), Rational(0), Rational(1)}, Poly{Rational(1)}, true));
}

// F = P_n^2 + Q_n Q_(n-1) on every line, in both directions.
TEST(Expansion, NormInvariantHolds) {
    for (auto cs : {genus1_quartic_example(), genus2_sextic_example()}) {
        auto s = ExpansionState::validate(cs.curve, cs.seed);
        auto f = s;
        auto b = s;
        for (int k = 0; k < 10; ++k) {
            EXPECT_EQ(f.P() * f.P() + f.Q() * f.Q_prev(), cs.curve->F);
            EXPECT_EQ(b.P() * b.P() + b.Q() * b.Q_prev(), cs.curve->F);
            f = f.forward();
            b = b.backward();
        }
    }
}

TEST(Expansion, ForwardThenBackwardIsIdentity) {
    auto cs = genus2_sextic_example();
    auto s = ExpansionState::validate(cs.curve, cs.seed);
    auto t = s.forward().forward().backward().backward();
    EXPECT_EQ(t.index(), 0);
    EXPECT_EQ(t.P(), s.P());
    EXPECT_EQ(t.Q(), s.Q());
}

TEST(Expansion, GenusOneQuarticLines) {
    auto cs = genus1_quartic_example();
    auto lines = expand_forward(ExpansionState::validate(cs.curve, cs.seed), 2);
    EXPECT_EQ(lines[0].d, Rational(1));
    EXPECT_EQ(lines[0].v, Rational(-1));
    EXPECT_EQ(lines[1].d, Rational(1));
    EXPECT_EQ(lines[1].v, Rational(0));
}

// P_(n+1) = A + 2 d X^(g-1) + ... : check the scalar against the polynomial directly.
TEST(Expansion, ScalarsMatchPolynomials) {
    auto cs = genus2_sextic_example();
    for (const auto& l : expand_forward(ExpansionState::validate(cs.curve, cs.seed), 6)) {
        const int g = cs.curve->genus;
        EXPECT_EQ(l.u, l.Q.coeff(g));
        EXPECT_EQ(l.v, -l.Q.coeff(g - 1) / l.u);
        EXPECT_EQ(l.P.coeff(g + 1), Rational(1));
    }
}

TEST(Expansion, RandomRegularCurves) {
    std::mt19937_64 rng(21);
    for (int g = 1; g <= 3; ++g) {
        auto cs = random_regular_curve_seed(g, rng, 6, 6);
        auto s = ExpansionState::validate(cs.curve, cs.seed);
        for (const auto& l : expand_forward(s, 6)) EXPECT_FALSE(l.d.is_zero());
        for (const auto& l : expand_backward(s, 6)) EXPECT_FALSE(l.u.is_zero());
    }
}

// Oracle: (Y - P_1)/Q_0 expanded by series arithmetic from the curve alone.
TEST(Moments, RecursionMatchesSeriesRoute) {
    for (auto cs : {genus1_quartic_example(), genus2_sextic_example()}) {
        auto s = ExpansionState::validate(cs.curve, cs.seed);
        auto m = moments_forward(s, 10);
        const int g = cs.curve->genus;
        auto y = sqrt_series(cs.curve->F, 20);
        auto p1 = s.forward().P();
        auto tail = to_tail(series_divide(y - p1, LaurentSeries::from_poly(s.Q(), -40)), 10);
        // The tail starts at X^-1 only after scaling by the line's normalisation; compare ratios.
        ASSERT_FALSE(tail.coeffs[0].is_zero());
        for (std::size_t j = 0; j < 10; ++j)
            EXPECT_EQ(m.s[j] * tail.coeffs[0], tail.coeffs[j] * m.s[0]) << "g=" << g << " j=" << j;
    }
}

TEST(Moments, GenusOneQuarticValues) {
    auto cs = genus1_quartic_example();
    auto m = moments_forward(ExpansionState::validate(cs.curve, cs.seed), 12);
    EXPECT_EQ(m.s, ints({1, 0, 2, 1, 6, 7, 24, 41, 115, 236, 613, 1380}));
}

// Hankel determinants computed by a generic determinant on the explicit matrix.
TEST(Hankel, DeltaMatchesExplicitMatrix) {
    auto s = ints({1, 0, 2, 1, 6, 7, 24, 41, 115, 236, 613});
    for (std::size_t n = 1; n <= 5; ++n) {
        RationalMatrix h(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) h(i, j) = s[i + j];
        EXPECT_EQ(hankel_delta(s, n), determinant(h));
        RationalMatrix st(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) st(i, j) = s[i + (j + 1 == n ? n : j)];
        EXPECT_EQ(hankel_delta_star(s, n), determinant(st));
    }
    EXPECT_EQ(hankel_delta(s, 0), Rational(1));
}

// Orthogonality: q_n from the three-term recurrence with the expansion's d, v is
// orthogonal to lower powers under the moment pairing.
TEST(Hankel, OrthogonalPolynomials) {
    auto cs = genus2_sextic_example();
    auto s0 = ExpansionState::validate(cs.curve, cs.seed);
    auto m = moments_forward(s0, 16);
    auto lines = expand_forward(s0, 9);
    std::vector<Rational> d{Rational(0)}, v{Rational(0)};
    for (std::size_t k = 1; k < lines.size(); ++k) {
        d.push_back(lines[k].d);
        v.push_back(lines[k].v);
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        Poly q = orthopoly_recurrence(d, v, n);
        EXPECT_EQ(q, orthopoly_determinant(m.s, n)) << n;
        for (std::size_t k = 0; k < n; ++k)
            EXPECT_TRUE(moment_pairing(m.s, q, Poly::monomial(Rational(1), static_cast<int>(k))).is_zero());
        EXPECT_FALSE(moment_pairing(m.s, q, q).is_zero());
    }
}

TEST(Hankel, ForwardAndBackwardFormulas) {
    for (auto cs : {genus1_quartic_example(), genus2_sextic_example()}) {
        auto s = ExpansionState::validate(cs.curve, cs.seed);
        EXPECT_TRUE(verify_forward_hankel(s, 6).ok());
        EXPECT_TRUE(verify_backward_hankel(s, 6).ok());
    }
}

TEST(Hankel, BorderedIdentitiesOnRandomData) {
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<long> num(-5, 5);
    std::vector<Rational> s;
    for (int i = 0; i < 13; ++i) s.emplace_back(num(rng));
    EXPECT_TRUE(bordered_hankel_identities(s, 6).ok());
}

TEST(Hankel, NeedsEnoughMoments) {
    auto s = ints({1, 2, 3});
    EXPECT_THROW(hankel_table(s, 4), InsufficientData);
}
