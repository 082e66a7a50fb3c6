#include "hypercf/cfrac.hpp"

namespace hypercf {

namespace {

Poly integer_poly(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Poly(std::move(v));
}

}  // namespace

std::shared_ptr<const CurveSpec> CurveSpec::make(int genus, Poly A, Poly R, bool allow_degenerate_r) {
    if (genus < 1) throw InvalidCurve("genus must be at least 1");
    if (A.degree() != genus + 1 || A.leading() != Rational(1))
        throw InvalidCurve("A must be monic of degree " + std::to_string(genus + 1));
    if (!A.coeff(genus).is_zero()) throw InvalidCurve("A must have zero X^" + std::to_string(genus) + " coefficient");
    if (R.degree() > genus) throw InvalidCurve("R must have degree at most " + std::to_string(genus));
    if (!allow_degenerate_r && R.coeff(genus).is_zero())
        throw InvalidCurve("R must have degree " + std::to_string(genus) + " with nonzero leading coefficient");
    auto c = std::make_shared<CurveSpec>();
    c->genus = genus;
    c->F = A * A + Rational(4) * R;
    c->A = std::move(A);
    c->R = std::move(R);
    return c;
}

ExpansionState ExpansionState::validate(std::shared_ptr<const CurveSpec> curve, const SeedLine& seed) {
    const int g = curve->genus;
    Poly diff = seed.P0 - curve->A;
    if (diff.degree() > g - 1)
        throw InvalidSeed(InvalidSeed::Reason::degree, "P0 - A must have degree at most " + std::to_string(g - 1));
    if (seed.Q0.degree() != g)
        throw InvalidSeed(InvalidSeed::Reason::leading_coefficient,
                          "Q0 must have degree " + std::to_string(g) + " with nonzero leading coefficient");
    auto [q, r] = divmod(curve->F - seed.P0 * seed.P0, seed.Q0);
    if (!r.is_zero())
        throw InvalidSeed(InvalidSeed::Reason::not_divisible,
                          "Q0 does not divide F - P0^2 (remainder " + to_string(r) + ")");
    return ExpansionState(std::move(curve), 0, seed.P0, seed.Q0, std::move(q));
}

Rational ExpansionState::v() const { return -Q_.coeff(curve_->genus - 1) / u(); }

Rational ExpansionState::d() const { return pi(curve_->genus - 1) / Rational(2); }

Rational ExpansionState::pi(int j) const { return P_.coeff(j) - curve_->A.coeff(j); }

Rational ExpansionState::rho(int j) const { return Q_.coeff(j) / u(); }

Rational ExpansionState::rho_prev(int j) const { return Qprev_.coeff(j) / u_prev(); }

CFLine ExpansionState::line() const {
    CFLine l;
    l.n = n_;
    l.P = P_;
    l.Q = Q_;
    l.u = u();
    l.d = d();
    const int g = curve_->genus;
    for (int j = 0; j < g; ++j) l.pi.push_back(pi(j));
    if (!l.u.is_zero()) {
        l.v = v();
        for (int j = 0; j < g; ++j) l.rho.push_back(rho(j));
    }
    return l;
}

ExpansionState ExpansionState::forward() const {
    const int g = curve_->genus;
    if (Q_.degree() != g || u().is_zero())
        throw SingularStep(n_, "expansion is singular at line " + std::to_string(n_) + " (u_n = 0)");
    Rational un = u();
    Poly a = Poly{v(), Rational(1)} * (Rational(2) / un);
    Poly Pn1 = a * Q_ - P_;
    Poly Qn1 = exact_div(curve_->F - Pn1 * Pn1, Q_);
    return ExpansionState(curve_, n_ + 1, std::move(Pn1), std::move(Qn1), Q_);
}

ExpansionState ExpansionState::backward() const {
    const int g = curve_->genus;
    if (Qprev_.degree() != g)
        throw SingularStep(n_ - 1, "expansion is singular at line " + std::to_string(n_ - 1) + " (u_(n-1) = 0)");
    // a = alpha X + beta with a Q_(n-1) - P_n - A of degree < g.
    Poly target = P_ + curve_->A;
    Rational alpha = target.coeff(g + 1) / Qprev_.coeff(g);
    Rational beta = (target.coeff(g) - alpha * Qprev_.coeff(g - 1)) / Qprev_.coeff(g);
    Poly a{beta, alpha};
    Poly Pm = a * Qprev_ - P_;
    Poly Qmm = exact_div(curve_->F - Pm * Pm, Qprev_);
    return ExpansionState(curve_, n_ - 1, std::move(Pm), Qprev_, std::move(Qmm));
}

std::vector<CFLine> expand_forward(const ExpansionState& s, std::size_t count) {
    std::vector<CFLine> out;
    if (count == 0) return out;
    ExpansionState cur = s;
    out.push_back(cur.line());
    while (out.size() < count) {
        cur = cur.forward();
        out.push_back(cur.line());
    }
    return out;
}

std::vector<CFLine> expand_backward(const ExpansionState& s, std::size_t count) {
    std::vector<CFLine> out;
    ExpansionState cur = s;
    while (out.size() < count) {
        cur = cur.backward();
        out.push_back(cur.line());
    }
    return out;
}

namespace {

LaurentSeries divide_by_poly(const LaurentSeries& num, const Poly& q) {
    int err = q.degree() - static_cast<int>(num.size()) - 2;
    return series_divide(num, LaurentSeries::from_poly(q, err));
}

}  // namespace

LaurentSeries complete_quotient(const ExpansionState& s, std::size_t order) {
    LaurentSeries y = sqrt_series(s.curve().F, order + static_cast<std::size_t>(s.curve().genus) + 3);
    return divide_by_poly(y + s.P(), s.Q()).truncated(-static_cast<int>(order) - 1);
}

LaurentSeries expand_G(const ExpansionState& s, std::size_t order, Branch branch) {
    const auto& c = s.curve();
    LaurentSeries y = sqrt_series(c.F, order + 2);
    LaurentSeries num;
    if (branch == Branch::infinity1) {
        ExpansionState next = s.forward();
        num = y - next.P();
    } else {
        num = (-y) + s.P();
    }
    return divide_by_poly(num, s.Q()).truncated(-static_cast<int>(order) - 1);
}

CurveAndSeed random_curve_seed(int genus, std::mt19937_64& rng, int bound) {
    if (genus < 1) throw InvalidCurve("genus must be at least 1");
    std::uniform_int_distribution<long> coef(-bound, bound);
    auto nonzero = [&] {
        long x = 0;
        while (x == 0) x = coef(rng);
        return Rational(x);
    };
    const int g = genus;
    for (;;) {
        std::vector<Rational> a(static_cast<std::size_t>(g) + 2);
        for (int j = 0; j < g; ++j) a[static_cast<std::size_t>(j)] = Rational(coef(rng));
        a[static_cast<std::size_t>(g) + 1] = Rational(1);
        Poly A(a);
        std::vector<Rational> p(static_cast<std::size_t>(g));
        for (int j = 0; j + 1 < g; ++j) p[static_cast<std::size_t>(j)] = Rational(coef(rng));
        p[static_cast<std::size_t>(g) - 1] = nonzero();
        Poly P0 = A + Poly(p);
        std::vector<Rational> q(static_cast<std::size_t>(g) + 1);
        for (int j = 0; j < g; ++j) q[static_cast<std::size_t>(j)] = Rational(coef(rng));
        q[static_cast<std::size_t>(g)] = nonzero();
        Poly Q0(q);
        Rational c = nonzero();
        // A^2 - P0^2 = quo Q0 + rem; then Q_(-1) = quo + c and 4R = c Q0 - rem.
        auto [quo, rem] = divmod(A * A - P0 * P0, Q0);
        Poly R = (Rational(c) * Q0 - rem) / Rational(4);
        if (R.degree() != g || R.coeff(g).is_zero()) continue;
        return {CurveSpec::make(g, std::move(A), std::move(R)), SeedLine{std::move(P0), std::move(Q0)}};
    }
}

CurveAndSeed random_regular_curve_seed(int genus, std::mt19937_64& rng, std::size_t forward, std::size_t backward,
                                       int bound, int attempts) {
    for (int i = 0; i < attempts; ++i) {
        CurveAndSeed cs = random_curve_seed(genus, rng, bound);
        try {
            auto line0 = ExpansionState::validate(cs.curve, cs.seed);
            bool regular = !line0.d().is_zero();
            for (const auto& l : expand_forward(line0, forward + 1)) regular = regular && !l.d.is_zero();
            for (const auto& l : expand_backward(line0, backward + 1)) regular = regular && !l.d.is_zero();
            if (regular) return cs;
        } catch (const SingularStep&) {
        } catch (const InvalidSeed&) {
        }
    }
    throw Error("no regular random curve in " + std::to_string(attempts) + " attempts");
}

CurveAndSeed genus1_quartic_example() {
    auto c = CurveSpec::make(1, integer_poly({-3, 0, 1}), integer_poly({-2, -1}));
    return {c, SeedLine{integer_poly({-1, 0, 1}), integer_poly({-2, -2})}};
}

CurveAndSeed genus2_sextic_example() {
    auto c = CurveSpec::make(2, integer_poly({-1, -5, 0, 1}), integer_poly({-3, -2, -1}));
    Poly P0{Rational(1, 2), Rational(-5, 2), Rational(0), Rational(1)};
    return {c, SeedLine{std::move(P0), integer_poly({6, -2, -4})}};
}

}  // namespace hypercf
