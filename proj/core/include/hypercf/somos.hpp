#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "hypercf/tau.hpp"

namespace hypercf {

// sum_i coefficients[i] * tau_(n+k-i) tau_(n+i) = 0 for window_first <= n <= window_last,
// i = 0 .. k/2.
struct SomosRelation {
    int k = 0;
    std::vector<Rational> coefficients;
    long window_first = 0, window_last = -1;
};

Rational somos_residual(const SomosRelation& rel, const IndexedSeq& seq, long n);
// First n in [n0, n1] where the residual is nonzero.
std::optional<long> somos_first_violation(const SomosRelation& rel, const IndexedSeq& seq, long n0, long n1);
// Integer coefficients with content 1 and positive first nonzero entry.
std::vector<Rational> normalize_coefficients(std::vector<Rational> c);

// tau_(n+4) tau_n = alpha tau_(n+3) tau_(n+1) + beta tau_(n+2)^2 with alpha = u^2,
// beta = u^2 (v^2 + f). Returns the relation (1, -alpha, -beta) over every n the
// sequence allows; throws RelationViolation at the first failing n.
SomosRelation somos4_verify(const IndexedSeq& tau, const Rational& f, const Rational& u, const Rational& v);

// d_(n+1) d_(n-1) d_n^2 = alpha d_n + beta along a genus-1 d-orbit.
Report qrt_check(std::span<const Rational> d, const Rational& f, const Rational& u, const Rational& v);

// Quadratic-recurrence moments
//   t_j = alpha t_(j-1) + beta t_(j-2) + gamma sum_{i<=j-2} t_i t_(j-2-i)
// whose Hankel determinants equal those of the expansion's forward moments.
struct QuadraticBridge {
    Rational alpha, beta, gamma, t0, t1;
    std::vector<Rational> moments;
    std::vector<Rational> hankel;    // of the recurrence moments, sizes 0..N
    std::vector<Rational> expected;  // of the expansion moments, sizes 0..N
    Report report;
};

QuadraticBridge quadratic_bridge(const ExpansionState& line0, std::size_t N);
std::vector<Rational> quadratic_recurrence_moments(const Rational& alpha, const Rational& beta,
                                                   const Rational& gamma, const Rational& t0, const Rational& t1,
                                                   std::size_t count);

struct CasoratiWindow {
    long center = 0;
    Rational determinant;              // 5x5, rows tau_(n+j+r) tau_(n-j+r)
    std::array<Rational, 5> minors{};  // first four rows with column j removed
};

struct Somos8Detection {
    long clean_first = 0, clean_last = -1;  // largest zero-free window used
    std::vector<CasoratiWindow> windows;
    bool determinants_vanish = false;
    bool minor_ratios_constant = false;
    std::size_t nullity = 0;
    // Shortest relation in the span of the Casorati nullspace; k < 8 when the
    // leading coefficients vanish.
    std::optional<SomosRelation> relation;
    std::size_t training_rows = 0, verified_rows = 0;
};

// Needs 13 consecutive nonzero terms; fits on the first rows and re-checks the rest.
Somos8Detection somos8_detect(const IndexedSeq& tau);

// Smallest k in 4..kmax with a relation fitted on the leading rows and
// re-verified on all remaining rows; nullopt if none.
std::optional<SomosRelation> somos_k_find(const IndexedSeq& tau, int kmax);

// Terms somos_k_find needs to test up to kmax.
std::size_t somos_k_required_length(int kmax);

}  // namespace hypercf
