#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hypercf/maps.hpp"
#include "hypercf/report.hpp"
#include "hypercf/somos.hpp"

namespace hypercf {

// Long exact genus-2 orbits without gcd cost. With integer sequences t, s,
//   d_k = t_(k+1) t_(k-1) / t_k^2,   v_k = s_k / t_k - s_(k+1) / t_(k+1).
// t satisfies the bilinear relation fitted on an exactly iterated prefix and s
// satisfies its linearization, so both advance by exact integer division.
struct G2LiftedOrbit {
    G2State seed;
    SomosRelation relation;
    std::vector<Integer> t, s;  // t[i] = t_(i-1), likewise s

    std::size_t steps() const { return t.size() - 3; }
    // Canonical state after k steps; costs several gcds of t-sized integers.
    G2State state(std::size_t k) const;
    // (d_(k-1), d_k, v_(k-1), v_k) in floating point, without forming the rationals.
    std::array<double, 4> pair_coordinates(std::size_t k) const;
};

// Iterates the rational map for `prefix` steps, fits the relation, checks that
// both recurrences reproduce the prefix, then extends to `steps`. Throws Error
// when the prefix is not integral in this normalization or no relation fits.
G2LiftedOrbit g2_lifted_orbit(const G2State& seed, std::size_t steps, std::size_t prefix = 40);

// Exact audit of a lifted orbit. The first `prefix` states must equal the
// iterates of the rational map and keep both invariants; after that the
// invariants are compared exactly at every `stride`-th state and at the last.
Report g2_lifted_orbit_audit(const G2LiftedOrbit& orbit, std::size_t prefix, std::size_t stride);

}  // namespace hypercf
