#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hypercf/dual.hpp"
#include "hypercf/linalg.hpp"

namespace hypercf {

// Genus 1: (d, v) -> (-d - v^2 - f, -v - u / (d + v^2 + f)).
struct G1Params {
    Rational f, u;
};

struct G1State {
    Rational d, v;
    G1Params params;
};

template <class T>
std::array<T, 2> g1_map(const T& d, const T& v, const G1Params& p) {
    T s = d + v * v + T(p.f);
    return {-s, -v - T(p.u) / s};
}

// Conserved quantity d v^2 - u v + d^2 + f d; equals -u times the curve's v.
template <class T>
T g1_energy(const T& d, const T& v, const G1Params& p) {
    return d * v * v - T(p.u) * v + d * d + T(p.f) * d;
}

G1State g1_step(const G1State& s);
Rational g1_energy(const G1State& s);
// Curve parameter v recovered from the energy: -H/u.
Rational g1_curve_v(const G1State& s);
// states[0] = s, then `steps` iterates; SingularStep names the failing index.
std::vector<G1State> g1_orbit(const G1State& s, std::size_t steps);

// Genus 2 in coordinates (d_n, e_n, v_(n-1), w_(n-1)).
struct G2Params {
    Rational f, g, u;
};

struct G2State {
    Rational d, e, v_prev, w_prev;
    G2Params params;

    // From (d_(n-1), d_n, v_(n-1), v_n); w_(n-1) follows from the line relations.
    static G2State from_pair_coordinates(const Rational& d_prev, const Rational& d, const Rational& v_prev,
                                         const Rational& v, const G2Params& params);

    // v_n and w_n of the same line.
    Rational v() const { return -v_prev - e; }
    Rational w() const;
};

template <class T>
T g2_w_next(const T& d, const T& e, const T& vp, const T& wp, const G2Params& p) {
    return -wp + vp * vp + vp * e + d - T(p.u) / d + T(p.f);
}

template <class T>
std::array<T, 4> g2_map(const T& d, const T& e, const T& vp, const T& wp, const G2Params& p) {
    const T f(p.f), g(p.g), u(p.u);
    T D = d * (e * e + e * vp + wp) + u;
    T d1 = -D / d;
    T e1 = (vp * (d * d + d * (e + vp) * (e + vp) - d * wp + f * d - u) + e * (T(2) * d * d - d * wp + f * d - u) +
            g * d) / D;
    T v = -vp - e;
    T w = g2_w_next(d, e, vp, wp, p);
    return {d1, e1, v, w};
}

// (-u v_curve, u w_curve) as functions of the state.
template <class T>
std::array<T, 2> g2_invariants(const T& d, const T& e, const T& vp, const T& wp, const G2Params& p) {
    const T f(p.f), g(p.g);
    T v = -vp - e;
    T w = g2_w_next(d, e, vp, wp, p);
    T h1 = d * (T(2) * d * e + v * wp + vp * w + f * e + g);
    T h2 = d * (d * e * e - w * wp + g * e);
    return {h1, h2};
}

// Poisson matrix in (d, e, v_(n-1), w_(n-1)):
// {d, w} = -1, {e, v} = 1/d, {e, w} = (v + e)/d.
template <class T>
Matrix<T> g2_poisson_matrix(const T& d, const T& e, const T& vp, const T& /*wp*/) {
    Matrix<T> m(4, 4);
    T ev = T(1) / d;
    T ew = (vp + e) / d;
    m(0, 3) = T(-1);
    m(3, 0) = T(1);
    m(1, 2) = ev;
    m(2, 1) = -ev;
    m(1, 3) = ew;
    m(3, 1) = -ew;
    return m;
}

G2State g2_step(const G2State& s);
std::array<Rational, 2> g2_invariants(const G2State& s);
std::vector<G2State> g2_orbit(const G2State& s, std::size_t steps);

std::array<Rational, 4> g2_coordinates(const G2State& s);
G2State g2_with_coordinates(std::span<const Rational> x, const G2Params& p);

// {a, b} at the state for functions of (d, e, v_(n-1), w_(n-1)).
Rational g2_bracket(const DualFunction& a, const DualFunction& b, const G2State& s);

// Cyclic sum {{x_i, x_j}, x_k} + ... over all coordinate triples; zero matrix entries
// mean the Jacobi identity holds at the state.
std::vector<Rational> g2_jacobi_defects(const G2State& s);

// J(s) Pi(s) J(s)^T - Pi(step(s)), flattened; zero iff the step is Poisson at s.
std::vector<Rational> g2_poisson_map_defect(const G2State& s);

// Jacobian of the step at s.
RationalMatrix g2_jacobian(const G2State& s);

}  // namespace hypercf
