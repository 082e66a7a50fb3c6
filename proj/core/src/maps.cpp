#include "hypercf/maps.hpp"

namespace hypercf {

G1State g1_step(const G1State& s) {
    Rational denom = s.d + s.v * s.v + s.params.f;
    if (denom.is_zero()) throw SingularStep(0, "genus-1 step undefined: d + v^2 + f = 0");
    auto [d, v] = g1_map(s.d, s.v, s.params);
    return {d, v, s.params};
}

Rational g1_energy(const G1State& s) { return g1_energy(s.d, s.v, s.params); }

Rational g1_curve_v(const G1State& s) { return -g1_energy(s) / s.params.u; }

std::vector<G1State> g1_orbit(const G1State& s, std::size_t steps) {
    std::vector<G1State> out{s};
    out.reserve(steps + 1);
    for (std::size_t n = 0; n < steps; ++n) {
        try {
            out.push_back(g1_step(out.back()));
        } catch (const SingularStep&) {
            throw SingularStep(static_cast<long>(n), "genus-1 orbit singular at step " + std::to_string(n));
        }
    }
    return out;
}

G2State G2State::from_pair_coordinates(const Rational& d_prev, const Rational& d, const Rational& v_prev,
                                       const Rational& v, const G2Params& params) {
    // e_n + v_n + v_(n-1) = 0 and w_(n-1) - v_(n-1)^2 = d_n + d_(n-1) + f.
    G2State s;
    s.d = d;
    s.e = -v - v_prev;
    s.v_prev = v_prev;
    s.w_prev = d + d_prev + params.f + v_prev * v_prev;
    s.params = params;
    return s;
}

Rational G2State::w() const { return g2_w_next(d, e, v_prev, w_prev, params); }

G2State g2_step(const G2State& s) {
    if (s.d.is_zero()) throw SingularStep(0, "genus-2 step undefined: d = 0");
    Rational D = s.d * (s.e * s.e + s.e * s.v_prev + s.w_prev) + s.params.u;
    if (D.is_zero()) throw SingularStep(0, "genus-2 step undefined: next d vanishes");
    auto [d, e, v, w] = g2_map(s.d, s.e, s.v_prev, s.w_prev, s.params);
    return {d, e, v, w, s.params};
}

std::array<Rational, 2> g2_invariants(const G2State& s) {
    return g2_invariants(s.d, s.e, s.v_prev, s.w_prev, s.params);
}

std::vector<G2State> g2_orbit(const G2State& s, std::size_t steps) {
    std::vector<G2State> out{s};
    out.reserve(steps + 1);
    for (std::size_t n = 0; n < steps; ++n) {
        try {
            out.push_back(g2_step(out.back()));
        } catch (const SingularStep&) {
            throw SingularStep(static_cast<long>(n), "genus-2 orbit singular at step " + std::to_string(n));
        }
    }
    return out;
}

std::array<Rational, 4> g2_coordinates(const G2State& s) { return {s.d, s.e, s.v_prev, s.w_prev}; }

G2State g2_with_coordinates(std::span<const Rational> x, const G2Params& p) {
    if (x.size() != 4) throw Error("genus-2 state needs four coordinates");
    return {x[0], x[1], x[2], x[3], p};
}

namespace {

Matrix<Dual> dual_poisson(const G2State& s) {
    auto c = g2_coordinates(s);
    auto xs = dual_variables(c);
    return g2_poisson_matrix(xs[0], xs[1], xs[2], xs[3]);
}

}  // namespace

Rational g2_bracket(const DualFunction& a, const DualFunction& b, const G2State& s) {
    auto c = g2_coordinates(s);
    Gradient ga = dual_eval(a, c);
    Gradient gb = dual_eval(b, c);
    Matrix<Rational> pi;
    try {
        pi = g2_poisson_matrix(s.d, s.e, s.v_prev, s.w_prev);
    } catch (const DivisionByZero&) {
        throw PoleError("Poisson matrix has a pole at " + describe_point(c));
    }
    Rational r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (!pi(i, j).is_zero()) r += ga.gradient[i] * pi(i, j) * gb.gradient[j];
    return r;
}

std::vector<Rational> g2_jacobi_defects(const G2State& s) {
    Matrix<Dual> pi = dual_poisson(s);
    auto jac = [&](std::size_t i, std::size_t j, std::size_t k) {
        Rational acc;
        for (std::size_t l = 0; l < 4; ++l) acc += pi(i, l).value() * pi(j, k).deriv(l);
        return acc;
    };
    std::vector<Rational> out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) out.push_back(jac(i, j, k) + jac(j, k, i) + jac(k, i, j));
    return out;
}

RationalMatrix g2_jacobian(const G2State& s) {
    auto c = g2_coordinates(s);
    auto xs = dual_variables(c);
    std::array<Dual, 4> img;
    try {
        img = g2_map(xs[0], xs[1], xs[2], xs[3], s.params);
    } catch (const DivisionByZero&) {
        throw PoleError("genus-2 step has a pole at " + describe_point(c));
    }
    RationalMatrix j(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t col = 0; col < 4; ++col) j(r, col) = img[r].deriv(col);
    return j;
}

std::vector<Rational> g2_poisson_map_defect(const G2State& s) {
    RationalMatrix j = g2_jacobian(s);
    RationalMatrix pi = g2_poisson_matrix(s.d, s.e, s.v_prev, s.w_prev);
    RationalMatrix pushed = multiply(multiply(j, pi), transpose(j));
    G2State t = g2_step(s);
    RationalMatrix target = g2_poisson_matrix(t.d, t.e, t.v_prev, t.w_prev);
    std::vector<Rational> out;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) out.push_back(pushed(a, b) - target(a, b));
    return out;
}

}  // namespace hypercf
