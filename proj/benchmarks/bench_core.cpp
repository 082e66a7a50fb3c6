#include <random>

#include <benchmark/benchmark.h>

#include "hypercf/hypercf.hpp"

using namespace hypercf;

namespace {

IntegerMatrix random_integer_matrix(std::size_t n) {
    std::mt19937_64 rng(n);
    std::uniform_int_distribution<long> dist(-99, 99);
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
    return m;
}

void BM_Bareiss(benchmark::State& state) {
    auto m = random_integer_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(bareiss_determinant(m));
}
BENCHMARK(BM_Bareiss)->RangeMultiplier(2)->Range(4, 32);

void BM_ExpandForward(benchmark::State& state) {
    auto cs = genus2_sextic_example();
    auto line0 = ExpansionState::validate(cs.curve, cs.seed);
    for (auto _ : state) benchmark::DoNotOptimize(expand_forward(line0, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ExpandForward)->Arg(8)->Arg(16)->Arg(32);

void BM_Moments(benchmark::State& state) {
    auto cs = genus2_sextic_example();
    auto line0 = ExpansionState::validate(cs.curve, cs.seed);
    for (auto _ : state) benchmark::DoNotOptimize(moments_forward(line0, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Moments)->Arg(16)->Arg(32)->Arg(64);

void BM_HankelTable(benchmark::State& state) {
    auto cs = genus2_sextic_example();
    auto m = moments_forward(ExpansionState::validate(cs.curve, cs.seed), 2 * static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hankel_table(m, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_HankelTable)->Arg(8)->Arg(12)->Arg(16);

void BM_Somos8Detect(benchmark::State& state) {
    auto cs = genus2_sextic_example();
    auto tau = tau_from_seed(ExpansionState::validate(cs.curve, cs.seed), 12, 10).tau;
    for (auto _ : state) benchmark::DoNotOptimize(somos8_detect(tau));
}
BENCHMARK(BM_Somos8Detect);

G2State orbit_seed() {
    return G2State::from_pair_coordinates(Rational(5, 4), Rational(2), Rational(-1, 2), Rational(0),
                                          G2Params{Rational(-5), Rational(-1), Rational(-1)});
}

// Rational iteration: cost grows with the height of the iterates.
void BM_GenusTwoOrbitRational(benchmark::State& state) {
    auto s = orbit_seed();
    for (auto _ : state) benchmark::DoNotOptimize(g2_orbit(s, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_GenusTwoOrbitRational)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_GenusTwoOrbitLifted(benchmark::State& state) {
    auto s = orbit_seed();
    for (auto _ : state) benchmark::DoNotOptimize(g2_lifted_orbit(s, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_GenusTwoOrbitLifted)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_PoissonJacobi(benchmark::State& state) {
    std::mt19937_64 rng(9);
    auto p = random_lax_point(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(jacobi_check(p));
}
BENCHMARK(BM_PoissonJacobi)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

// The packaged benchmark_main archive is unusable with this toolchain (LTO mismatch).
BENCHMARK_MAIN();
