#include "hypercf/tau.hpp"

namespace hypercf {

const Rational& IndexedSeq::at(long n) const {
    if (!contains(n)) throw InsufficientData(0, "sequence has no term with index " + std::to_string(n));
    return values[static_cast<std::size_t>(n - first)];
}

Rational TauSeq::d(long n) const {
    const Rational& t1 = tau.at(n - 1);
    return tau.at(n) * tau.at(n - 2) / (t1 * t1);
}

Rational TauSeq::v(long n) const {
    return tau_star.at(n - 1) / tau.at(n - 1) - tau_star.at(n) / tau.at(n);
}

TauSeq glue_tau(const HankelTable& forward, const HankelTable& backward, const ExpansionState& line0) {
    if (forward.delta.size() < 2 || backward.delta.size() < 2)
        throw InsufficientData(2, "gluing needs Hankel tables through size 1");
    ExpansionState line1 = line0.forward();
    const Rational d0 = line0.d(), d1 = line1.d(), v0 = line0.v();
    if (d0.is_zero() || d1.is_zero()) throw InvalidSeed(InvalidSeed::Reason::degenerate, "gluing needs d_0, d_1 != 0");
    // d_0 = tau_0 tau_(-2) / tau_(-1)^2 fixes a; d_1 = tau_1 tau_(-1) / tau_0^2 fixes b.
    Gauge g;
    g.a = backward.delta[1] / d0;
    g.b = g.a * forward.delta[1] / d1;
    g.c = v0;

    const long nb = static_cast<long>(backward.delta.size()) - 1;
    TauSeq t;
    t.gauge = g;
    t.tau.first = t.tau_star.first = -nb - 1;
    for (long n = -nb - 1; n <= -1; ++n) {
        const std::size_t k = static_cast<std::size_t>(-n - 1);
        Rational scale = g.a * g.b.pow(n);
        t.tau.values.push_back(scale * backward.delta[k]);
        // The backward expansion runs the other way, so its bordered determinant enters with a minus sign.
        t.tau_star.values.push_back(scale * (g.c * backward.delta[k] - backward.delta_star[k]));
    }
    for (std::size_t n = 0; n < forward.delta.size(); ++n) {
        t.tau.values.push_back(forward.delta[n]);
        t.tau_star.values.push_back(forward.delta_star[n]);
    }
    return t;
}

TauSeq tau_from_seed(const ExpansionState& line0, std::size_t forward, std::size_t backward) {
    MomentSeq mf = moments_forward(line0, 2 * forward + 2);
    MomentSeq mb = moments_backward(line0, 2 * backward + 2);
    return glue_tau(hankel_table(mf, forward), hankel_table(mb, backward), line0);
}

TauSeq apply_gauge(const TauSeq& t, const Gauge& g) {
    TauSeq r = t;
    for (std::size_t k = 0; k < t.tau.values.size(); ++k) {
        long n = t.tau.first + static_cast<long>(k);
        Rational scale = g.a * g.b.pow(n);
        r.tau.values[k] = scale * t.tau.values[k];
        r.tau_star.values[k] = scale * (t.tau_star.values[k] + g.c * t.tau.values[k]);
    }
    return r;
}

Report verify_tau(const TauSeq& t, const ExpansionState& line0) {
    Report r;
    r.name = "tau";
    const long lo = t.tau.first, hi = t.tau.last();
    // Line n exists for lo+1 <= n <= hi when the Hankel tables were computed from line0.
    std::vector<CFLine> fwd = expand_forward(line0, static_cast<std::size_t>(std::max(hi, 0L)) + 1);
    std::vector<CFLine> bwd = expand_backward(line0, static_cast<std::size_t>(std::max(-lo - 1, 0L)));
    auto line = [&](long n) -> const CFLine& {
        return n >= 0 ? fwd[static_cast<std::size_t>(n)] : bwd[static_cast<std::size_t>(-n - 1)];
    };
    for (long n = lo + 1; n <= hi; ++n) {
        r.expect_equal("v", n, t.v(n), line(n).v);
        if (n >= lo + 2) r.expect_equal("d", n, t.d(n), line(n).d);
    }
    return r;
}

}  // namespace hypercf
