#pragma once

#include <cstddef>
#include <vector>

#include "hypercf/moments.hpp"

namespace hypercf {

// Finite window of a two-sided sequence: values[k] is the term with index first + k.
struct IndexedSeq {
    long first = 0;
    std::vector<Rational> values;

    long last() const { return first + static_cast<long>(values.size()) - 1; }
    bool contains(long n) const { return n >= first && n <= last(); }
    const Rational& at(long n) const;
};

// tau -> a b^n tau,  tau* -> a b^n (tau* + c tau).
struct Gauge {
    Rational a{1}, b{1}, c{0};
};

struct TauSeq {
    IndexedSeq tau, tau_star;
    Gauge gauge;  // constants applied to the backward half when gluing

    // d_n = tau_n tau_(n-2) / tau_(n-1)^2
    Rational d(long n) const;
    // v_n = tau*_(n-1)/tau_(n-1) - tau*_n/tau_n
    Rational v(long n) const;
};

// Joins forward Hankel determinants (n >= 0) with backward ones (n <= -1).
// The backward half is rescaled so that d_0, d_1 and v_0 agree with line0.
TauSeq glue_tau(const HankelTable& forward, const HankelTable& backward, const ExpansionState& line0);

// Convenience: moments, Hankel tables and gluing; indices -backward-1 .. forward.
TauSeq tau_from_seed(const ExpansionState& line0, std::size_t forward, std::size_t backward);

TauSeq apply_gauge(const TauSeq& t, const Gauge& g);

// d_n and v_n of the glued sequence against the expansion, wherever both are defined.
Report verify_tau(const TauSeq& t, const ExpansionState& line0);

}  // namespace hypercf
