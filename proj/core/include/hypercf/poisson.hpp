#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "hypercf/cfrac.hpp"
#include "hypercf/linalg.hpp"
#include "hypercf/report.hpp"

namespace hypercf {

// Lax matrix [[P, R], [Q, -P]] with P monic of degree g+1, R monic of degree g,
// Q of degree g. Coordinates are ordered
//   p_0..p_g, q_0..q_g, r_0..r_(g-1)          (3g+2 entries)
// and points are constructed on the slice p_g = 0.
struct LaxPoint {
    int genus = 0;
    Poly P, Q, R;

    static LaxPoint make(int genus, Poly P, Poly Q, Poly R);
    static LaxPoint from_coordinates(int genus, std::span<const Rational> x);
    // P = P_n, Q = u_(n-1) Q_n, R = Q_(n-1) / u_(n-1).
    static LaxPoint from_expansion(const ExpansionState& s);

    std::vector<Rational> coordinates() const;
    Poly F() const { return P * P + Q * R; }
    Rational d0() const { return -Q.coeff(genus) / Rational(4); }
    Rational v0() const { return Q.coeff(genus - 1) / (Rational(4) * d0()); }
};

std::size_t lax_dimension(int genus);

// Poisson matrix on the coordinates; entries are affine in the point.
template <class T>
Matrix<T> lax_poisson_matrix(int g, std::span<const T> x) {
    const std::size_t n = lax_dimension(g);
    const std::size_t G = static_cast<std::size_t>(g);
    auto p = [&](std::size_t k) { return k <= G ? x[k] : (k == G + 1 ? T(1) : T(0)); };
    auto q = [&](std::size_t k) { return k <= G ? x[G + 1 + k] : T(0); };
    auto r = [&](std::size_t k) { return k < G ? x[2 * G + 2 + k] : (k == G ? T(1) : T(0)); };
    Matrix<T> m(n, n);
    auto set = [&](std::size_t a, std::size_t b, const T& v) {
        m(a, b) += v;
        m(b, a) -= v;
    };
    for (std::size_t i = 0; i <= G; ++i) {
        for (std::size_t j = 0; j <= G; ++j) set(i, G + 1 + j, T(2) * q(i + j + 1));
        for (std::size_t j = 0; j < G; ++j) set(i, 2 * G + 2 + j, T(-2) * r(i + j + 1));
    }
    for (std::size_t j = 1; j <= G; ++j) set(G + 1 + j, G + 1, T(-4) * q(j));
    for (std::size_t i = 0; i <= G; ++i)
        for (std::size_t j = 0; j < G; ++j) {
            T v = T(4) * p(i + j + 1);
            if (i == 0) v -= T(4) * r(j);
            set(G + 1 + i, 2 * G + 2 + j, v);
        }
    return m;
}

// Polynomials P, Q, R built from a coordinate vector (any scalar type).
template <class T>
struct LaxPolys {
    BasicPoly<T> P, Q, R;
};

template <class T>
LaxPolys<T> lax_polys(int g, std::span<const T> x) {
    const std::size_t G = static_cast<std::size_t>(g);
    std::vector<T> p(x.begin(), x.begin() + static_cast<long>(G + 1));
    p.push_back(T(1));
    std::vector<T> q(x.begin() + static_cast<long>(G + 1), x.begin() + static_cast<long>(2 * G + 2));
    std::vector<T> r(x.begin() + static_cast<long>(2 * G + 2), x.begin() + static_cast<long>(3 * G + 2));
    r.push_back(T(1));
    return {BasicPoly<T>(std::move(p)), BasicPoly<T>(std::move(q)), BasicPoly<T>(std::move(r))};
}

// One step of the discrete flow:
//   d0 = -q_g/4, v0 = q_(g-1)/(4 d0), R~ = -Q/(4 d0), P~ = -P + 2(z + v0) R~,
//   Q~ = -2 [(z + v0)(P~ - P) + 2 d0 R].
template <class T>
std::vector<T> bt_step_coordinates(int g, std::span<const T> x) {
    auto L = lax_polys(g, x);
    T d0 = -L.Q.coeff(g) / T(4);
    T v0 = L.Q.coeff(g - 1) / (T(4) * d0);
    BasicPoly<T> shiftz{v0, T(1)};
    BasicPoly<T> Rt = L.Q * (T(-1) / (T(4) * d0));
    BasicPoly<T> Pt = shiftz * Rt * T(2) - L.P;
    BasicPoly<T> Qt = (shiftz * (Pt - L.P) + L.R * (T(2) * d0)) * T(-2);
    std::vector<T> out;
    for (int k = 0; k <= g; ++k) out.push_back(Pt.coeff(k));
    for (int k = 0; k <= g; ++k) out.push_back(Qt.coeff(k));
    for (int k = 0; k < g; ++k) out.push_back(Rt.coeff(k));
    return out;
}

LaxPoint bt_step(const LaxPoint& p);

RationalMatrix lax_poisson_matrix(const LaxPoint& p);

// {a, b} = grad a . Pi . grad b at the point.
Rational bracket_eval(const DualFunction& a, const DualFunction& b, const LaxPoint& p);

// Coefficient c_j of F = P^2 + QR as a function of the coordinates.
DualFunction spectral_coefficient(int genus, int j);
// P(z), Q(z), R(z), F(z) at a fixed z as functions of the coordinates.
DualFunction entry_P(int genus, const Rational& z);
DualFunction entry_Q(int genus, const Rational& z);
DualFunction entry_R(int genus, const Rational& z);
DualFunction entry_F(int genus, const Rational& z);

// c_g .. c_(2g+1) Poisson-commute with every coordinate.
Report casimir_check(const LaxPoint& p);
// {c_j, c_k} = 0 for j, k < g, and {F(z), F(w)} = 0 at the given spectral values.
Report hamiltonian_involution(const LaxPoint& p, std::span<const Rational> spectral);
// Cyclic sums of {{x_i, x_j}, x_k} vanish.
Report jacobi_check(const LaxPoint& p);
// Rank of the Poisson matrix is 2g.
Report rank_check(const LaxPoint& p);
// {L(z), F(w)} equals [M(z, w), L(z)] and the closed forms of the three brackets.
Report lax_form_check(const LaxPoint& p, const Rational& z, const Rational& w);
// The three brackets {P(z), F(w)}, {Q(z), F(w)}, {R(z), F(w)} have degree < g in w.
Report bracket_degree_check(const LaxPoint& p, const Rational& z);
// R = prod (z - x_i) with the given distinct roots, y_i = P(x_i): {y_i, x_j} = 2 delta_ij.
Report canonical_pairs_check(const LaxPoint& p, std::span<const Rational> roots);
// The step is Poisson (J Pi J^T = Pi at the image), isospectral, and has the
// expected brackets of d0 and R~.
Report poisson_map_check(const LaxPoint& p, const Rational& z, const Rational& w);

// Random point on the slice; with `split_r`, R has distinct integer roots returned in `roots`.
LaxPoint random_lax_point(int genus, std::mt19937_64& rng, bool split_r = false,
                          std::vector<Rational>* roots = nullptr);

}  // namespace hypercf
