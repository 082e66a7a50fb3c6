#include "hypercf/lift.hpp"

#include <algorithm>
#include <cmath>

namespace hypercf {

namespace {

struct Scaled {
    double mantissa;
    long exponent;
};

Scaled scaled(const Integer& z) {
    long e = 0;
    double m = mpz_get_d_2exp(&e, z.get_mpz_t());
    return {m, e};
}

double ratio(const Scaled& a, const Scaled& b) { return std::ldexp(a.mantissa / b.mantissa, static_cast<int>(a.exponent - b.exponent)); }

Integer divide_exactly(const Integer& num, const Integer& den, long index) {
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw Error("integer lift: inexact division at index " + std::to_string(index));
    return q;
}

}  // namespace

G2State G2LiftedOrbit::state(std::size_t k) const {
    if (k == 0) return seed;
    if (k > steps()) throw Error("lifted orbit has only " + std::to_string(steps()) + " steps");
    // t_j lives at index j + 1.
    const std::size_t i = k + 1;
    Rational d = Rational(t[i + 1] * t[i - 1], t[i] * t[i]);
    Rational d_prev = Rational(t[i] * t[i - 2], t[i - 1] * t[i - 1]);
    Rational rho_prev(s[i - 1], t[i - 1]), rho(s[i], t[i]), rho_next(s[i + 1], t[i + 1]);
    return G2State::from_pair_coordinates(d_prev, d, rho_prev - rho, rho - rho_next, seed.params);
}

std::array<double, 4> G2LiftedOrbit::pair_coordinates(std::size_t k) const {
    if (k == 0) {
        Rational v = seed.v();
        Rational d_prev = seed.w_prev - seed.d - seed.params.f - seed.v_prev * seed.v_prev;
        return {d_prev.to_double(), seed.d.to_double(), seed.v_prev.to_double(), v.to_double()};
    }
    const std::size_t i = k + 1;
    Scaled a = scaled(t[i - 2]), b = scaled(t[i - 1]), c = scaled(t[i]), e = scaled(t[i + 1]);
    auto prod = [](Scaled x, Scaled y) { return Scaled{x.mantissa * y.mantissa, x.exponent + y.exponent}; };
    double d_prev = ratio(prod(c, a), prod(b, b));
    double d = ratio(prod(e, b), prod(c, c));
    double r_prev = ratio(scaled(s[i - 1]), b), r = ratio(scaled(s[i]), c), r_next = ratio(scaled(s[i + 1]), e);
    return {d_prev, d, r_prev - r, r - r_next};
}

G2LiftedOrbit g2_lifted_orbit(const G2State& seed, std::size_t steps, std::size_t prefix) {
    if (prefix < 20) prefix = 20;
    auto orbit = g2_orbit(seed, prefix);

    // t_(-1) = d_0, t_0 = t_1 = 1; s_0 = 0 fixes the additive gauge of s.
    std::vector<Rational> tq{seed.d, Rational(1), Rational(1)};
    std::vector<Rational> sq{seed.d * seed.v_prev, Rational(0)};
    for (std::size_t k = 1; k <= prefix; ++k) {
        const Rational& last = tq.back();
        tq.push_back(orbit[k].d * last * last / tq[tq.size() - 2]);
    }
    for (std::size_t k = 0; k <= prefix; ++k) {
        Rational rho = sq[k + 1] / tq[k + 1] - orbit[k].v();
        sq.push_back(rho * tq[k + 2]);
    }
    for (std::size_t i = 0; i < tq.size(); ++i)
        if (!tq[i].is_integer() || !sq[i].is_integer())
            throw Error("integer lift: prefix is not integral in this normalization");

    auto detection = somos8_detect(IndexedSeq{-1, tq});
    if (!detection.relation) throw Error("integer lift: no bilinear relation fits the prefix");

    G2LiftedOrbit out;
    out.seed = seed;
    out.relation = *detection.relation;
    for (std::size_t i = 0; i < tq.size(); ++i) {
        out.t.push_back(tq[i].numerator());
        out.s.push_back(sq[i].numerator());
    }

    const int k = out.relation.k;
    const std::size_t half = static_cast<std::size_t>(k / 2);
    std::vector<Integer> c;
    for (const auto& x : out.relation.coefficients) c.push_back(x.numerator());
    if (c.empty() || c[0] == 0) throw Error("integer lift: relation has no leading term");

    // Residuals of the relation and its linearization at window start n.
    auto residuals = [&](std::size_t n, Integer& rt, Integer& rs) {
        rt = 0;
        rs = 0;
        for (std::size_t j = 0; j <= half; ++j) {
            const std::size_t hi = n + static_cast<std::size_t>(k) - j, lo = n + j;
            rt += c[j] * (out.t[hi] * out.t[lo]);
            rs += c[j] * (out.s[hi] * out.t[lo] + out.t[hi] * out.s[lo]);
        }
    };
    Integer rt, rs;
    for (std::size_t n = 0; n + static_cast<std::size_t>(k) < out.t.size(); ++n) {
        residuals(n, rt, rs);
        if (rt != 0 || rs != 0)
            throw Error("integer lift: relation fails on the prefix at index " + std::to_string(static_cast<long>(n) - 1));
    }

    const std::size_t total = steps + 3;
    out.t.reserve(total);
    out.s.reserve(total);
    while (out.t.size() < total) {
        const std::size_t n = out.t.size() - static_cast<std::size_t>(k);
        const long index = static_cast<long>(out.t.size()) - 1;
        out.t.emplace_back(0);
        out.s.emplace_back(0);
        // With the new terms set to zero the residuals are exactly the tails.
        residuals(n, rt, rs);
        const Integer lead = c[0] * out.t[n];
        if (lead == 0) throw Error("integer lift: zero term at index " + std::to_string(index - static_cast<long>(k)));
        out.t.back() = divide_exactly(-rt, lead, index);
        rs += c[0] * (out.t.back() * out.s[n]);
        out.s.back() = divide_exactly(-rs, lead, index);
    }
    return out;
}

Report g2_lifted_orbit_audit(const G2LiftedOrbit& orbit, std::size_t prefix, std::size_t stride) {
    Report r;
    r.name = "lifted-orbit";
    const std::size_t n = orbit.steps();
    prefix = std::min(prefix, n);
    const auto h0 = g2_invariants(orbit.seed);
    auto check_invariants = [&](std::size_t k, const G2State& st) {
        auto h = g2_invariants(st);
        r.expect_equal("H1", static_cast<long>(k), h[0], h0[0]);
        r.expect_equal("H2", static_cast<long>(k), h[1], h0[1]);
    };
    auto direct = g2_orbit(orbit.seed, prefix);
    for (std::size_t k = 0; k <= prefix; ++k) {
        G2State lifted = orbit.state(k);
        auto a = g2_coordinates(lifted), b = g2_coordinates(direct[k]);
        for (std::size_t c = 0; c < 4; ++c) r.expect_equal("map-agreement", static_cast<long>(k), a[c], b[c]);
        check_invariants(k, direct[k]);
    }
    if (stride == 0) stride = n;
    for (std::size_t k = stride; k <= n; k += stride)
        if (k > prefix) check_invariants(k, orbit.state(k));
    if (n > prefix && n % stride != 0) check_invariants(n, orbit.state(n));
    return r;
}

}  // namespace hypercf
