#include "hypercf/poisson.hpp"

#include <algorithm>

namespace hypercf {

std::size_t lax_dimension(int genus) { return 3 * static_cast<std::size_t>(genus) + 2; }

LaxPoint LaxPoint::make(int genus, Poly P, Poly Q, Poly R) {
    if (genus < 1) throw InvalidCurve("genus must be at least 1");
    if (P.degree() != genus + 1 || P.leading() != Rational(1))
        throw InvalidCurve("P must be monic of degree g+1");
    if (!P.coeff(genus).is_zero()) throw InvalidCurve("P must lie on the slice with zero z^g coefficient");
    if (R.degree() != genus || R.leading() != Rational(1)) throw InvalidCurve("R must be monic of degree g");
    if (Q.degree() != genus) throw InvalidCurve("Q must have degree g with nonzero leading coefficient");
    return LaxPoint{genus, std::move(P), std::move(Q), std::move(R)};
}

LaxPoint LaxPoint::from_coordinates(int genus, std::span<const Rational> x) {
    if (x.size() != lax_dimension(genus)) throw Error("wrong number of Lax coordinates");
    auto L = lax_polys(genus, x);
    return make(genus, std::move(L.P), std::move(L.Q), std::move(L.R));
}

LaxPoint LaxPoint::from_expansion(const ExpansionState& s) {
    Rational up = s.u_prev();
    if (up.is_zero()) throw SingularStep(s.index() - 1, "previous line has u = 0");
    return make(s.curve().genus, s.P(), s.Q() * up, s.Q_prev() / up);
}

std::vector<Rational> LaxPoint::coordinates() const {
    std::vector<Rational> x;
    for (int k = 0; k <= genus; ++k) x.push_back(P.coeff(k));
    for (int k = 0; k <= genus; ++k) x.push_back(Q.coeff(k));
    for (int k = 0; k < genus; ++k) x.push_back(R.coeff(k));
    return x;
}

LaxPoint bt_step(const LaxPoint& p) {
    auto x = p.coordinates();
    if (p.d0().is_zero()) throw SingularStep(0, "step undefined: d0 = 0");
    auto y = bt_step_coordinates<Rational>(p.genus, x);
    return LaxPoint::from_coordinates(p.genus, y);
}

RationalMatrix lax_poisson_matrix(const LaxPoint& p) {
    auto x = p.coordinates();
    return lax_poisson_matrix<Rational>(p.genus, x);
}

namespace {

std::vector<Rational> times_poisson(const RationalMatrix& pi, const std::vector<Rational>& ga) {
    std::vector<Rational> out(pi.cols());
    for (std::size_t i = 0; i < pi.rows(); ++i) {
        if (ga[i].is_zero()) continue;
        for (std::size_t j = 0; j < pi.cols(); ++j)
            if (!pi(i, j).is_zero()) out[j] += ga[i] * pi(i, j);
    }
    return out;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational acc;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
    return acc;
}

Rational bracket_grad(const RationalMatrix& pi, const std::vector<Rational>& ga, const std::vector<Rational>& gb) {
    return dot(times_poisson(pi, ga), gb);
}

std::vector<Rational> grad(const DualFunction& f, const std::vector<Rational>& x) { return dual_eval(f, x).gradient; }

}  // namespace

Rational bracket_eval(const DualFunction& a, const DualFunction& b, const LaxPoint& p) {
    auto x = p.coordinates();
    return bracket_grad(lax_poisson_matrix(p), grad(a, x), grad(b, x));
}

DualFunction spectral_coefficient(int genus, int j) {
    return [genus, j](std::span<const Dual> x) {
        auto L = lax_polys(genus, x);
        return (L.P * L.P + L.Q * L.R).coeff(j);
    };
}

DualFunction entry_P(int genus, const Rational& z) {
    return [genus, z](std::span<const Dual> x) { return lax_polys(genus, x).P.eval(Dual(z)); };
}
DualFunction entry_Q(int genus, const Rational& z) {
    return [genus, z](std::span<const Dual> x) { return lax_polys(genus, x).Q.eval(Dual(z)); };
}
DualFunction entry_R(int genus, const Rational& z) {
    return [genus, z](std::span<const Dual> x) { return lax_polys(genus, x).R.eval(Dual(z)); };
}
DualFunction entry_F(int genus, const Rational& z) {
    return [genus, z](std::span<const Dual> x) {
        auto L = lax_polys(genus, x);
        Dual zz(z);
        Dual pv = L.P.eval(zz);
        return pv * pv + L.Q.eval(zz) * L.R.eval(zz);
    };
}

Report casimir_check(const LaxPoint& p) {
    Report r;
    r.name = "casimir";
    auto x = p.coordinates();
    RationalMatrix pi = lax_poisson_matrix(p);
    for (int j = p.genus; j <= 2 * p.genus + 1; ++j) {
        auto flow = times_poisson(pi, grad(spectral_coefficient(p.genus, j), x));
        for (std::size_t k = 0; k < flow.size(); ++k) r.expect_zero("c" + std::to_string(j), static_cast<long>(k), flow[k]);
    }
    return r;
}

Report hamiltonian_involution(const LaxPoint& p, std::span<const Rational> spectral) {
    Report r;
    r.name = "involution";
    auto x = p.coordinates();
    RationalMatrix pi = lax_poisson_matrix(p);
    std::vector<std::vector<Rational>> gh;
    for (int j = 0; j < p.genus; ++j) gh.push_back(grad(spectral_coefficient(p.genus, j), x));
    for (std::size_t a = 0; a < gh.size(); ++a)
        for (std::size_t b = a + 1; b < gh.size(); ++b)
            r.expect_zero("H" + std::to_string(a) + ",H" + std::to_string(b), 0, bracket_grad(pi, gh[a], gh[b]));
    for (std::size_t a = 0; a < spectral.size(); ++a)
        for (std::size_t b = a + 1; b < spectral.size(); ++b)
            r.expect_zero("F(z),F(w)", static_cast<long>(a * spectral.size() + b),
                          bracket_grad(pi, grad(entry_F(p.genus, spectral[a]), x),
                                       grad(entry_F(p.genus, spectral[b]), x)));
    return r;
}

Report jacobi_check(const LaxPoint& p) {
    Report r;
    r.name = "jacobi";
    auto x = p.coordinates();
    auto xs = dual_variables(x);
    Matrix<Dual> pi = lax_poisson_matrix<Dual>(p.genus, xs);
    const std::size_t n = x.size();
    auto term = [&](std::size_t i, std::size_t j, std::size_t k) {
        Rational acc;
        for (std::size_t l = 0; l < n; ++l) acc += pi(i, l).value() * pi(j, k).deriv(l);
        return acc;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                r.expect_zero("jacobi", static_cast<long>((i * n + j) * n + k),
                              term(i, j, k) + term(j, k, i) + term(k, i, j));
    return r;
}

Report rank_check(const LaxPoint& p) {
    Report r;
    r.name = "rank";
    std::size_t rk = rank(lax_poisson_matrix(p));
    r.expect(rk == 2 * static_cast<std::size_t>(p.genus), "rank", 0, "rank " + std::to_string(rk));
    return r;
}

Report lax_form_check(const LaxPoint& p, const Rational& z, const Rational& w) {
    Report r;
    r.name = "lax-form";
    const int g = p.genus;
    auto x = p.coordinates();
    RationalMatrix pi = lax_poisson_matrix(p);
    auto gF = grad(entry_F(g, w), x);
    Rational PF = bracket_grad(pi, grad(entry_P(g, z), x), gF);
    Rational QF = bracket_grad(pi, grad(entry_Q(g, z), x), gF);
    Rational RF = bracket_grad(pi, grad(entry_R(g, z), x), gF);

    const Rational Pz = p.P(z), Qz = p.Q(z), Rz = p.R(z);
    const Rational Pw = p.P(w), Qw = p.Q(w), Rw = p.R(w);
    const Rational h = z - w;
    // M(z, w) = 2/(z-w) [[P(w) + (z-w)R(w), R(w)], [Q(w), -P(w) - (z-w)R(w)]]
    const Rational k = Rational(2) / h;
    const Rational m11 = k * (Pw + h * Rw), m12 = k * Rw, m21 = k * Qw, m22 = -m11;
    // L(z) = [[P, R], [Q, -P]]; [M, L] entrywise.
    const Rational c11 = m12 * Qz - Rz * m21;
    const Rational c12 = m11 * Rz + m12 * (-Pz) - (Pz * m12 + Rz * m22);
    const Rational c21 = m21 * Pz + m22 * Qz - (Qz * m11 + (-Pz) * m21);
    r.expect_equal("{P,F}=[M,L]11", 0, PF, c11);
    r.expect_equal("{R,F}=[M,L]12", 0, RF, c12);
    r.expect_equal("{Q,F}=[M,L]21", 0, QF, c21);

    r.expect_equal("{P,F} closed form", 0, PF, Rational(2) * (Qz * Rw - Qw * Rz) / h);
    r.expect_equal("{Q,F} closed form", 0, QF, Rational(4) * (Pz * Qw - Pw * Qz) / h - Rational(4) * Qz * Rw);
    r.expect_equal("{R,F} closed form", 0, RF, Rational(4) * (Pw * Rz - Pz * Rw) / h + Rational(4) * Rz * Rw);
    return r;
}

Report bracket_degree_check(const LaxPoint& p, const Rational& z) {
    Report r;
    r.name = "bracket-degree";
    const int g = p.genus;
    auto x = p.coordinates();
    RationalMatrix pi = lax_poisson_matrix(p);
    auto gP = grad(entry_P(g, z), x), gQ = grad(entry_Q(g, z), x), gR = grad(entry_R(g, z), x);
    std::vector<Rational> ws, vp, vq, vr;
    for (int i = 0; static_cast<int>(ws.size()) < g + 2; ++i) {
        Rational w = z + Rational(i + 1);
        ws.push_back(w);
        auto gF = grad(entry_F(g, w), x);
        vp.push_back(bracket_grad(pi, gP, gF));
        vq.push_back(bracket_grad(pi, gQ, gF));
        vr.push_back(bracket_grad(pi, gR, gF));
    }
    auto check = [&](const char* name, const std::vector<Rational>& vals) {
        Poly f = interpolate(ws, vals);
        r.expect(f.degree() <= g - 1, name, f.degree(), "degree " + std::to_string(f.degree()));
    };
    check("{P,F}", vp);
    check("{Q,F}", vq);
    check("{R,F}", vr);
    return r;
}

Report canonical_pairs_check(const LaxPoint& p, std::span<const Rational> roots) {
    Report r;
    r.name = "canonical-pairs";
    const int g = p.genus;
    const std::size_t G = static_cast<std::size_t>(g);
    if (roots.size() != G) throw Error("need g roots of R");
    Poly Rd = p.R.derivative(), Pd = p.P.derivative();
    std::vector<std::vector<Rational>> gx, gy;
    for (const auto& xi : roots) {
        if (!p.R(xi).is_zero()) throw Error("given value is not a root of R");
        std::vector<Rational> ax(lax_dimension(g)), ay(lax_dimension(g));
        Rational rd = Rd(xi);
        Rational pd = Pd(xi);
        // R(x_i) = 0: dx_i/dr_k = -x_i^k / R'(x_i); y_i = P(x_i).
        for (std::size_t k = 0; k < G; ++k) {
            Rational dx = -xi.pow(static_cast<long>(k)) / rd;
            ax[2 * G + 2 + k] = dx;
            ay[2 * G + 2 + k] = pd * dx;
        }
        for (std::size_t k = 0; k <= G; ++k) ay[k] = xi.pow(static_cast<long>(k));
        gx.push_back(std::move(ax));
        gy.push_back(std::move(ay));
    }
    RationalMatrix pi = lax_poisson_matrix(p);
    for (std::size_t i = 0; i < G; ++i)
        for (std::size_t j = 0; j < G; ++j) {
            long idx = static_cast<long>(i * G + j);
            r.expect_equal("{y,x}", idx, bracket_grad(pi, gy[i], gx[j]), Rational(i == j ? 2 : 0));
            r.expect_zero("{x,x}", idx, bracket_grad(pi, gx[i], gx[j]));
            r.expect_zero("{y,y}", idx, bracket_grad(pi, gy[i], gy[j]));
        }
    return r;
}

Report poisson_map_check(const LaxPoint& p, const Rational& z, const Rational& w) {
    Report r;
    r.name = "poisson-map";
    const int g = p.genus;
    auto x = p.coordinates();
    auto xs = dual_variables(x);
    std::vector<Dual> img;
    try {
        img = bt_step_coordinates<Dual>(g, xs);
    } catch (const DivisionByZero&) {
        throw PoleError("step has a pole at " + describe_point(x));
    }
    const std::size_t n = x.size();
    RationalMatrix J(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) J(a, b) = img[a].deriv(b);
    RationalMatrix pushed = multiply(multiply(J, lax_poisson_matrix(p)), transpose(J));
    LaxPoint q = bt_step(p);
    RationalMatrix target = lax_poisson_matrix(q);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            r.expect_equal("J Pi J^T", static_cast<long>(a * n + b), pushed(a, b), target(a, b));

    Poly F0 = p.F(), F1 = q.F();
    r.expect(F0 == F1, "isospectral", 0, to_string(F0) + " vs " + to_string(F1));

    auto d0 = [g](std::span<const Dual> v) { return -lax_polys(g, v).Q.coeff(g) / Dual(4); };
    auto Rt = [g](const Rational& at) {
        return DualFunction([g, at](std::span<const Dual> v) {
            auto y = bt_step_coordinates<Dual>(g, v);
            return lax_polys(g, std::span<const Dual>(y)).R.eval(Dual(at));
        });
    };
    r.expect_zero("{d0,P}", 0, bracket_eval(d0, entry_P(g, w), p));
    r.expect_equal("{d0,Q}", 0, bracket_eval(d0, entry_Q(g, w), p), Rational(-4) * p.d0());
    r.expect_equal("{d0,R}", 0, bracket_eval(d0, entry_R(g, w), p), Rational(-1));
    Poly Rtilde = q.R;
    r.expect_equal("{P,R~}", 0, bracket_eval(entry_P(g, z), Rt(w), p),
                   Rational(2) * (Rtilde(z) - Rtilde(w)) / (z - w));
    return r;
}

LaxPoint random_lax_point(int genus, std::mt19937_64& rng, bool split_r, std::vector<Rational>* roots) {
    std::uniform_int_distribution<long> coef(-5, 5);
    std::uniform_int_distribution<long> den(1, 3);
    auto rnd = [&] { return Rational(coef(rng), den(rng)); };
    const int g = genus;
    for (;;) {
        std::vector<Rational> p(static_cast<std::size_t>(g) + 2), q(static_cast<std::size_t>(g) + 1);
        for (int k = 0; k < g; ++k) p[static_cast<std::size_t>(k)] = rnd();
        p.back() = Rational(1);
        for (auto& c : q) c = rnd();
        if (q.back().is_zero() || q[static_cast<std::size_t>(g) - 1].is_zero()) continue;
        Poly R;
        if (split_r) {
            std::vector<Rational> rs;
            while (rs.size() < static_cast<std::size_t>(g)) {
                Rational c(coef(rng));
                if (std::find(rs.begin(), rs.end(), c) == rs.end()) rs.push_back(c);
            }
            R = Poly::constant(Rational(1));
            for (const auto& c : rs) R = R * Poly{-c, Rational(1)};
            if (roots) *roots = rs;
        } else {
            std::vector<Rational> r(static_cast<std::size_t>(g) + 1);
            for (int k = 0; k < g; ++k) r[static_cast<std::size_t>(k)] = rnd();
            r.back() = Rational(1);
            R = Poly(r);
        }
        return LaxPoint::make(g, Poly(p), Poly(q), R);
    }
}

}  // namespace hypercf
