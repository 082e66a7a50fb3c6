#include <random>

#include <gtest/gtest.h>

#include "hypercf/hypercf.hpp"

using namespace hypercf;

namespace {

G2State long_orbit_seed() {
    return G2State::from_pair_coordinates(Rational(5, 4), Rational(2), Rational(-1, 2), Rational(0),
                                          G2Params{Rational(-5), Rational(-1), Rational(-1)});
}

}  // namespace

TEST(GenusOneMap, EnergyConserved) {
    G1State s{Rational(2, 3), Rational(-1, 2), G1Params{Rational(1), Rational(3)}};
    const Rational h = g1_energy(s);
    for (const auto& x : g1_orbit(s, 25)) EXPECT_EQ(g1_energy(x), h);
}

TEST(GenusOneMap, SingularStepNamesIndex) {
    // d + v^2 + f = 0 at the start.
    G1State s{Rational(1), Rational(1), G1Params{Rational(-2), Rational(1)}};
    try {
        g1_orbit(s, 5);
        FAIL() << "expected SingularStep";
    } catch (const SingularStep& e) {
        EXPECT_EQ(e.index(), 0);
    }
}

// The curve's own lines give the orbit: d_(n+1), v_(n+1) from d_n, v_n.
TEST(GenusOneMap, MatchesExpansion) {
    auto cs = genus1_quartic_example();
    auto lines = expand_forward(ExpansionState::validate(cs.curve, cs.seed), 8);
    G1Params p{cs.curve->A.coeff(0), cs.curve->u()};
    for (std::size_t k = 1; k + 1 < lines.size(); ++k) {
        auto next = g1_step(G1State{lines[k].d, lines[k].v, p});
        EXPECT_EQ(next.d, lines[k + 1].d) << k;
        EXPECT_EQ(next.v, lines[k + 1].v) << k;
    }
}

TEST(GenusTwoMap, InvariantsConserved) {
    auto s = long_orbit_seed();
    auto h = g2_invariants(s);
    EXPECT_EQ(h[0], Rational(-2));
    EXPECT_EQ(h[1], Rational(-3));
    for (const auto& x : g2_orbit(s, 30)) EXPECT_EQ(g2_invariants(x), h);
}

TEST(GenusTwoMap, PoissonAndJacobi) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 3);
    auto r = [&] { return Rational(num(rng), den(rng)); };
    int tested = 0;
    while (tested < 8) {
        G2State s{r(), r(), r(), r(), G2Params{r(), r(), r()}};
        if (s.d.is_zero() || s.params.u.is_zero()) continue;
        try {
            (void)g2_step(s);
        } catch (const Error&) {
            continue;
        }
        for (const auto& x : g2_poisson_map_defect(s)) EXPECT_TRUE(x.is_zero());
        for (const auto& x : g2_jacobi_defects(s)) EXPECT_TRUE(x.is_zero());
        ++tested;
    }
}

TEST(GenusTwoMap, PairCoordinatesRoundTrip) {
    auto s = long_orbit_seed();
    auto t = g2_step(s);
    auto back = G2State::from_pair_coordinates(s.d, t.d, t.v_prev, t.v(), s.params);
    EXPECT_EQ(back.d, t.d);
    EXPECT_EQ(back.e, t.e);
    EXPECT_EQ(back.w_prev, t.w_prev);
}

TEST(Lift, AgreesWithRationalIteration) {
    auto s = long_orbit_seed();
    auto orbit = g2_orbit(s, 80);
    auto lifted = g2_lifted_orbit(s, 80, 30);
    ASSERT_EQ(lifted.steps(), 80u);
    for (std::size_t k = 0; k <= 80; ++k) {
        auto x = lifted.state(k);
        EXPECT_EQ(x.d, orbit[k].d) << k;
        EXPECT_EQ(x.e, orbit[k].e) << k;
        EXPECT_EQ(x.v_prev, orbit[k].v_prev) << k;
        EXPECT_EQ(x.w_prev, orbit[k].w_prev) << k;
    }
    auto f = lifted.pair_coordinates(80);
    EXPECT_DOUBLE_EQ(f[1], orbit[80].d.to_double());
    EXPECT_TRUE(g2_lifted_orbit_audit(lifted, 80, 20).ok());
}

TEST(Lift, AuditDetectsCorruption) {
    auto lifted = g2_lifted_orbit(long_orbit_seed(), 60, 30);
    lifted.t[50] += 1;
    EXPECT_FALSE(g2_lifted_orbit_audit(lifted, 60, 10).ok());
}
