#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "hypercf/cfrac.hpp"
#include "hypercf/report.hpp"

namespace hypercf {

enum class Direction { forward, backward };

// Coefficients s_j of X^-(j+1) in the tail function at the first or second
// point at infinity, with the curve and seed they came from.
struct MomentSeq {
    Direction direction = Direction::forward;
    std::vector<Rational> s;
    std::shared_ptr<const CurveSpec> curve;
    SeedLine seed;
};

// s_0 .. s_(count-1) by the quadratic recursion. Needs the first forward
// (resp. backward) line to exist.
MomentSeq moments_forward(const ExpansionState& line0, std::size_t count);
MomentSeq moments_backward(const ExpansionState& line0, std::size_t count);

// det(s_(r + c)) over the given row and column index sets.
Rational hankel_minor(std::span<const Rational> s, std::span<const std::size_t> rows,
                      std::span<const std::size_t> cols);

// Hankel determinant of size n and its bordered relatives. Index sets:
//   delta         rows 0..n-1, cols 0..n-1
//   delta_star    rows 0..n-1, cols 0..n-2, n           (n = 0 gives 0)
//   delta_prime   rows = cols = 0..n-2, n
//   delta_dprime  rows 0..n-1, cols 0..n-2, n+1         (n = 0 gives 0)
//   delta_sstar   rows 0..n-1, cols 0..n-3, n-1, n      (n < 2 gives 0)
Rational hankel_delta(std::span<const Rational> s, std::size_t n);
Rational hankel_delta_star(std::span<const Rational> s, std::size_t n);
Rational hankel_delta_prime(std::span<const Rational> s, std::size_t n);
Rational hankel_delta_dprime(std::span<const Rational> s, std::size_t n);
Rational hankel_delta_sstar(std::span<const Rational> s, std::size_t n);

struct HankelTable {
    Direction direction = Direction::forward;
    std::vector<Rational> delta;       // sizes 0..N
    std::vector<Rational> delta_star;  // sizes 0..N
};

// Needs s_0 .. s_(2N-1).
HankelTable hankel_table(std::span<const Rational> s, std::size_t N);
HankelTable hankel_table(const MomentSeq& m, std::size_t N);

// d_n and v_n of the forward expansion against Hankel ratios, n <= N.
Report verify_forward_hankel(const ExpansionState& line0, std::size_t N);
// d_(1-n) and v_(-n) of the backward expansion against the backward Hankel ratios, n <= N.
Report verify_backward_hankel(const ExpansionState& line0, std::size_t N);

// Monic orthogonal polynomial of degree n from the bordered Hankel determinant.
Poly orthopoly_determinant(std::span<const Rational> s, std::size_t n);
// q_n = (X + v_n) q_(n-1) - d_n q_(n-2), q_0 = 1; d[k], v[k] hold d_k, v_k (index 0 unused).
Poly orthopoly_recurrence(std::span<const Rational> d, std::span<const Rational> v, std::size_t n);
// <a, b> = sum a_i b_j s_(i+j).
Rational moment_pairing(std::span<const Rational> s, const Poly& a, const Poly& b);

// The three bordered-determinant identities for sizes up to nmax; needs s_0 .. s_(2 nmax).
Report bordered_hankel_identities(std::span<const Rational> s, std::size_t nmax);

}  // namespace hypercf
