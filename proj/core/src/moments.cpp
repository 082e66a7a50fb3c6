#include "hypercf/moments.hpp"

#include <numeric>

#include "hypercf/linalg.hpp"

namespace hypercf {

namespace {

// Solves  Pc G + (Qu/2) G^2 = (Qr/2)  coefficientwise for G = sum s_j X^-(j+1):
//   s_j = -sum_{i=2}^{g+1} Pc[g+1-i] s_(j-i)
//         + (dd/s0) (conv(j-2) + sum_{l=3}^{g+2} rho[g+2-l] conv(j-l))
//         + s0 rbar[g-j]   (1 <= j <= g)
// where conv(m) = sum_{i<=m} s_i s_(m-i).
std::vector<Rational> quadratic_moments(int g, const Poly& Pc, const std::vector<Rational>& rho, const Rational& dd,
                                        const Rational& s0, const std::vector<Rational>& rbar, std::size_t count) {
    std::vector<Rational> s;
    if (count == 0) return s;
    if (s0.is_zero()) throw SingularStep(0, "leading moment vanishes");
    s.push_back(s0);
    std::vector<Rational> conv;
    const Rational ratio = dd / s0;
    for (std::size_t j = 1; j < count; ++j) {
        const long jj = static_cast<long>(j);
        if (jj >= 2) {
            const std::size_t m = j - 2;
            Rational c;
            for (std::size_t i = 0; i <= m; ++i) c += s[i] * s[m - i];
            conv.push_back(c);
        }
        Rational acc;
        for (int i = 2; i <= g + 1; ++i)
            if (jj - i >= 0) acc -= Pc.coeff(g + 1 - i) * s[static_cast<std::size_t>(jj - i)];
        Rational quad;
        if (jj >= 2) quad += conv[j - 2];
        for (int l = 3; l <= g + 2; ++l)
            if (jj - l >= 0) quad += rho[static_cast<std::size_t>(g + 2 - l)] * conv[static_cast<std::size_t>(jj - l)];
        acc += ratio * quad;
        if (jj >= 1 && jj <= g) acc += s0 * rbar[static_cast<std::size_t>(g - jj)];
        s.push_back(std::move(acc));
    }
    return s;
}

std::vector<Rational> normalized_low_coeffs(const Poly& q, int g) {
    Rational u = q.coeff(g);
    std::vector<Rational> r;
    for (int j = 0; j < g; ++j) r.push_back(q.coeff(j) / u);
    return r;
}

std::vector<std::size_t> iota(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return v;
}

}  // namespace

MomentSeq moments_forward(const ExpansionState& line0, std::size_t count) {
    const int g = line0.curve().genus;
    if (line0.u().is_zero()) throw SingularStep(line0.index(), "seed has u_0 = 0");
    ExpansionState line1 = line0.forward();
    if (line1.u().is_zero()) throw SingularStep(line1.index(), "first forward line has u = 0");
    MomentSeq m;
    m.direction = Direction::forward;
    m.curve = line0.curve_ptr();
    m.seed = SeedLine{line0.P(), line0.Q()};
    m.s = quadratic_moments(g, line1.P(), normalized_low_coeffs(line0.Q(), g), line1.d(), line1.u() / Rational(2),
                            normalized_low_coeffs(line1.Q(), g), count);
    return m;
}

MomentSeq moments_backward(const ExpansionState& line0, std::size_t count) {
    const int g = line0.curve().genus;
    if (line0.u_prev().is_zero() || line0.Q_prev().degree() != g)
        throw SingularStep(line0.index() - 1, "first backward line has u = 0");
    MomentSeq m;
    m.direction = Direction::backward;
    m.curve = line0.curve_ptr();
    m.seed = SeedLine{line0.P(), line0.Q()};
    m.s = quadratic_moments(g, line0.P(), normalized_low_coeffs(line0.Q(), g), line0.d(),
                            -line0.u_prev() / Rational(2), normalized_low_coeffs(line0.Q_prev(), g), count);
    return m;
}

Rational hankel_minor(std::span<const Rational> s, std::span<const std::size_t> rows,
                      std::span<const std::size_t> cols) {
    if (rows.size() != cols.size()) throw Error("hankel_minor: non-square index sets");
    RationalMatrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            std::size_t k = rows[i] + cols[j];
            if (k >= s.size())
                throw InsufficientData(k + 1, "need moment s_" + std::to_string(k));
            m(i, j) = s[k];
        }
    return determinant(m);
}

Rational hankel_delta(std::span<const Rational> s, std::size_t n) {
    auto idx = iota(n);
    return hankel_minor(s, idx, idx);
}

Rational hankel_delta_star(std::span<const Rational> s, std::size_t n) {
    if (n == 0) return Rational();
    auto rows = iota(n);
    auto cols = iota(n - 1);
    cols.push_back(n);
    return hankel_minor(s, rows, cols);
}

Rational hankel_delta_prime(std::span<const Rational> s, std::size_t n) {
    if (n == 0) return Rational();
    auto idx = iota(n - 1);
    idx.push_back(n);
    return hankel_minor(s, idx, idx);
}

Rational hankel_delta_dprime(std::span<const Rational> s, std::size_t n) {
    if (n == 0) return Rational();
    auto rows = iota(n);
    auto cols = iota(n - 1);
    cols.push_back(n + 1);
    return hankel_minor(s, rows, cols);
}

Rational hankel_delta_sstar(std::span<const Rational> s, std::size_t n) {
    if (n < 2) return Rational();
    auto rows = iota(n);
    auto cols = iota(n - 2);
    cols.push_back(n - 1);
    cols.push_back(n);
    return hankel_minor(s, rows, cols);
}

HankelTable hankel_table(std::span<const Rational> s, std::size_t N) {
    if (s.size() < 2 * N) throw InsufficientData(2 * N, "Hankel table of size " + std::to_string(N) + " needs " +
                                                            std::to_string(2 * N) + " moments");
    HankelTable t;
    if (N > 0) {
        RationalMatrix h(N, N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) h(i, j) = s[i + j];
        t.delta = leading_principal_minors(h);
    } else {
        t.delta = {Rational(1)};
    }
    // A vanishing leading minor stops the single elimination pass.
    for (std::size_t n = t.delta.size(); n <= N; ++n) t.delta.push_back(hankel_delta(s, n));
    for (std::size_t n = 0; n <= N; ++n) t.delta_star.push_back(hankel_delta_star(s, n));
    return t;
}

HankelTable hankel_table(const MomentSeq& m, std::size_t N) {
    HankelTable t = hankel_table(m.s, N);
    t.direction = m.direction;
    return t;
}

namespace {

void check_ratios(Report& r, const HankelTable& t, const std::vector<CFLine>& lines, long sign) {
    // lines[k] is line sign*k for forward (sign=+1); for backward lines[k] is line -k.
    auto ratio_v = [&](std::size_t n) {
        return t.delta_star[n - 1] / t.delta[n - 1] - t.delta_star[n] / t.delta[n];
    };
    const std::size_t N = t.delta.size() - 1;
    for (std::size_t n = 1; n <= N; ++n) {
        if (t.delta[n].is_zero() || t.delta[n - 1].is_zero()) {
            r.expect(false, "nonvanishing-hankel", static_cast<long>(n), "Hankel determinant vanishes");
            continue;
        }
        if (sign > 0) {
            r.expect_equal("v", static_cast<long>(n), lines[n].v, ratio_v(n));
            if (n >= 2)
                r.expect_equal("d", static_cast<long>(n), lines[n].d,
                               t.delta[n] * t.delta[n - 2] / (t.delta[n - 1] * t.delta[n - 1]));
        } else {
            // v_(-n) and d_(1-n)
            r.expect_equal("v", -static_cast<long>(n), lines[n].v, ratio_v(n));
            if (n >= 2)
                r.expect_equal("d", 1 - static_cast<long>(n), lines[n - 1].d,
                               t.delta[n] * t.delta[n - 2] / (t.delta[n - 1] * t.delta[n - 1]));
        }
    }
}

}  // namespace

Report verify_forward_hankel(const ExpansionState& line0, std::size_t N) {
    Report r;
    r.name = "forward-hankel";
    auto lines = expand_forward(line0, N + 1);
    MomentSeq m = moments_forward(line0, 2 * N);
    check_ratios(r, hankel_table(m, N), lines, +1);
    return r;
}

Report verify_backward_hankel(const ExpansionState& line0, std::size_t N) {
    Report r;
    r.name = "backward-hankel";
    std::vector<CFLine> lines{line0.line()};
    for (auto& l : expand_backward(line0, N)) lines.push_back(std::move(l));
    MomentSeq m = moments_backward(line0, 2 * N);
    check_ratios(r, hankel_table(m, N), lines, -1);
    return r;
}

Poly orthopoly_determinant(std::span<const Rational> s, std::size_t n) {
    Rational dn = hankel_delta(s, n);
    if (dn.is_zero()) throw DivisionByZero("Hankel determinant of size " + std::to_string(n) + " vanishes");
    auto rows = iota(n);
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j <= n; ++j)
            if (j != k) cols.push_back(j);
        Rational minor = hankel_minor(s, rows, cols);
        // Cofactor along the last row [1, X, ..., X^n].
        c[k] = ((n + k) % 2 == 0 ? minor : -minor) / dn;
    }
    return Poly(std::move(c));
}

Poly orthopoly_recurrence(std::span<const Rational> d, std::span<const Rational> v, std::size_t n) {
    Poly prev2;
    Poly prev = Poly::constant(Rational(1));
    if (n == 0) return prev;
    for (std::size_t k = 1; k <= n; ++k) {
        Poly next = Poly{v[k], Rational(1)} * prev;
        if (k >= 2) next -= d[k] * prev2;
        prev2 = std::move(prev);
        prev = std::move(next);
    }
    return prev;
}

Rational moment_pairing(std::span<const Rational> s, const Poly& a, const Poly& b) {
    Rational acc;
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j) {
            std::size_t k = static_cast<std::size_t>(i + j);
            if (k >= s.size()) throw InsufficientData(k + 1, "pairing needs moment s_" + std::to_string(k));
            acc += a.coeff(i) * b.coeff(j) * s[k];
        }
    }
    return acc;
}

Report bordered_hankel_identities(std::span<const Rational> s, std::size_t nmax) {
    Report r;
    r.name = "bordered-hankel";
    auto D = [&](std::size_t n) { return hankel_delta(s, n); };
    auto Ds = [&](std::size_t n) { return hankel_delta_star(s, n); };
    for (std::size_t n = 1; n <= nmax; ++n) {
        const long ln = static_cast<long>(n);
        if (n >= 2)
            r.expect_zero("desnanot-jacobi", ln,
                          D(n) * D(n - 2) - (D(n - 1) * hankel_delta_prime(s, n - 1) - Ds(n - 1) * Ds(n - 1)));
        r.expect_zero("three-term", ln,
                      hankel_delta_sstar(s, n) * D(n - 1) - Ds(n) * Ds(n - 1) + D(n) * hankel_delta_dprime(s, n - 1));
        r.expect_zero("column-shift", ln,
                      hankel_delta_dprime(s, n) - hankel_delta_prime(s, n) + hankel_delta_sstar(s, n));
    }
    return r;
}

}  // namespace hypercf
