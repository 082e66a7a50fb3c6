#include <random>

#include <gtest/gtest.h>

#include "hypercf/hypercf.hpp"

using namespace hypercf;

namespace {

// Plain integer Somos-4: t_(n+4) t_n = t_(n+3) t_(n+1) + t_(n+2)^2.
std::vector<Integer> somos4_plain(std::size_t count) {
    std::vector<Integer> t(4, Integer(1));
    while (t.size() < count) {
        std::size_t n = t.size() - 4;
        t.push_back((t[n + 3] * t[n + 1] + t[n + 2] * t[n + 2]) / t[n]);
    }
    return t;
}

}  // namespace

TEST(Tau, GenusOneQuarticIsSomos4) {
    auto cs = genus1_quartic_example();
    auto line0 = ExpansionState::validate(cs.curve, cs.seed);
    auto t = tau_from_seed(line0, 12, 1);
    auto plain = somos4_plain(15);
    for (long n = -2; n <= 12; ++n) EXPECT_EQ(t.tau.at(n), Rational(plain[static_cast<std::size_t>(n + 2)])) << n;
    EXPECT_TRUE(verify_tau(t, line0).ok());
}

TEST(Tau, Somos4VerifyReturnsCurveCoefficients) {
    auto cs = genus1_quartic_example();
    auto line0 = ExpansionState::validate(cs.curve, cs.seed);
    auto t = tau_from_seed(line0, 10, 4);
    // f = -3, u = -1, curve v = -2: alpha = 1, beta = 4 - 3 = 1. A wrong v must be rejected.
    EXPECT_THROW(somos4_verify(t.tau, Rational(-3), Rational(-1), Rational(-1)), RelationViolation);
    auto found = somos_k_find(t.tau, 4);
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(found->k, 4);
    auto rel = somos4_verify(t.tau, Rational(-3), Rational(-1), Rational(-2));
    EXPECT_EQ(normalize_coefficients(rel.coefficients), found->coefficients);
    EXPECT_EQ(found->coefficients, (std::vector<Rational>{Rational(1), Rational(-1), Rational(-1)}));
}

TEST(Tau, GaugeLeavesDAndVUnchanged) {
    auto cs = genus2_sextic_example();
    auto line0 = ExpansionState::validate(cs.curve, cs.seed);
    auto t = tau_from_seed(line0, 8, 6);
    auto g = apply_gauge(t, Gauge{Rational(3), Rational(-2, 5), Rational(7)});
    for (long n = t.tau.first + 2; n <= t.tau.last(); ++n) {
        EXPECT_EQ(g.d(n), t.d(n));
        EXPECT_EQ(g.v(n), t.v(n));
    }
}

TEST(Tau, GluedGenusTwoAgreesWithExpansion) {
    auto cs = genus2_sextic_example();
    auto line0 = ExpansionState::validate(cs.curve, cs.seed);
    auto t = tau_from_seed(line0, 8, 8);
    EXPECT_TRUE(verify_tau(t, line0).ok());
    EXPECT_EQ(t.tau.at(0), Rational(1));
    EXPECT_EQ(t.tau.at(1), Rational(1));
    EXPECT_EQ(t.tau.at(-1), Rational(2));
}

TEST(Somos, ResidualOfKnownRelation) {
    IndexedSeq s{0, {}};
    for (const auto& x : somos4_plain(12)) s.values.emplace_back(x);
    SomosRelation rel{4, {Rational(1), Rational(-1), Rational(-1)}, 0, 7};
    for (long n = 0; n <= 7; ++n) EXPECT_TRUE(somos_residual(rel, s, n).is_zero());
    EXPECT_FALSE(somos_first_violation(rel, s, 0, 7).has_value());
    s.values[9] += Rational(1);
    EXPECT_EQ(somos_first_violation(rel, s, 0, 7), std::optional<long>(5));
}

TEST(Somos, NormalizeCoefficients) {
    auto c = normalize_coefficients({Rational(-2, 3), Rational(4, 9), Rational(0)});
    EXPECT_EQ(c, (std::vector<Rational>{Rational(3), Rational(-2), Rational(0)}));
}

TEST(Somos, QrtAlongGenusOneOrbit) {
    G1Params p{Rational(-3), Rational(-1)};
    G1State s{Rational(1), Rational(-1), p};
    auto orbit = g1_orbit(s, 12);
    std::vector<Rational> d;
    for (const auto& x : orbit) d.push_back(x.d);
    EXPECT_TRUE(qrt_check(d, p.f, p.u, g1_curve_v(s)).ok());
    d[5] += Rational(1);
    EXPECT_FALSE(qrt_check(d, p.f, p.u, g1_curve_v(s)).ok());
}

// Any order-8 fit must annihilate the sequence on windows that were not used to fit it.
TEST(Somos, OrderEightOnGenusTwo) {
    auto cs = genus2_sextic_example();
    auto line0 = ExpansionState::validate(cs.curve, cs.seed);
    auto det = somos8_detect(tau_from_seed(line0, 12, 10).tau);
    EXPECT_TRUE(det.determinants_vanish);
    EXPECT_TRUE(det.minor_ratios_constant);
    ASSERT_TRUE(det.relation.has_value());
    EXPECT_EQ(det.relation->k, 8);
    auto longer = tau_from_seed(line0, 20, 10);
    EXPECT_FALSE(somos_first_violation(*det.relation, longer.tau, longer.tau.first, longer.tau.last() - 8).has_value());
}

TEST(Somos, TooShortInput) {
    IndexedSeq s{0, {Rational(1), Rational(1), Rational(2)}};
    EXPECT_THROW(somos8_detect(s), InsufficientData);
}

TEST(Bridge, QuadraticRecurrence) {
    auto t = quadratic_recurrence_moments(Rational(2), Rational(0), Rational(1), Rational(1), Rational(1), 6);
    // t_2 = 2*1 + 1*1 = 3, t_3 = 2*3 + 2*1*1 = 8, t_4 = 2*8 + (3 + 1 + 3) = 23
    EXPECT_EQ(t[2], Rational(3));
    EXPECT_EQ(t[3], Rational(8));
    EXPECT_EQ(t[4], Rational(23));
    auto cs = genus1_quartic_example();
    auto br = quadratic_bridge(ExpansionState::validate(cs.curve, cs.seed), 8);
    EXPECT_TRUE(br.report.ok());
    EXPECT_EQ(br.hankel, br.expected);
}
