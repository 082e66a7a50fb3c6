#include <functional>

#include "cli.hpp"

namespace hypercf::cli {

namespace {

CurveAndSeed bundle_curve(const json& bundle) {
    const std::string name = bundle.at("curve").get<std::string>();
    if (name == "genus1-quartic") return genus1_quartic_example();
    if (name == "genus2-sextic") return genus2_sextic_example();
    throw Error("bundle names unknown curve '" + name + "'");
}

// Position-by-position comparison; a length mismatch is itself a failure.
void compare(Report& r, const std::string& check, long first, const std::vector<Rational>& computed,
             const json& expected) {
    auto want = rationals_from_json(expected);
    if (computed.size() < want.size())
        r.expect(false, check + "-length", static_cast<long>(computed.size()),
                 "computed " + std::to_string(computed.size()) + " values, expected " + std::to_string(want.size()));
    for (std::size_t i = 0; i < want.size() && i < computed.size(); ++i)
        r.expect_equal(check, first + static_cast<long>(i), computed[i], want[i]);
}

std::vector<Rational> window(const IndexedSeq& s, long first, std::size_t count) {
    std::vector<Rational> out;
    for (long n = first; n < first + static_cast<long>(count) && s.contains(n); ++n) out.push_back(s.at(n));
    return out;
}

using Runner = std::function<void(const json& bundle, ReproResult&, const ReproOptions&)>;

void somos4_original(const json& b, ReproResult& res, const ReproOptions&) {
    const json& e = b.at("expected");
    auto cs = bundle_curve(b);
    auto line0 = ExpansionState::validate(cs.curve, cs.seed);
    const long first = e.at("first").get<long>();
    const std::size_t count = e.at("values").size();
    auto t = tau_from_seed(line0, static_cast<std::size_t>(first + static_cast<long>(count)), static_cast<std::size_t>(-first - 1));
    auto got = window(t.tau, first, count);
    compare(res.report, "tau", first, got, e.at("values"));
    res.report.merge(verify_tau(t, line0));
    res.details["tau"] = to_json(IndexedSeq{first, got});
}

void example3(const json& b, ReproResult& res, const ReproOptions&) {
    const json& e = b.at("expected");
    auto cs = bundle_curve(b);
    auto line0 = ExpansionState::validate(cs.curve, cs.seed);
    const std::size_t nm = e.at("moments").size(), nh = e.at("hankel").size();
    auto m = moments_forward(line0, std::max(nm, 2 * nh));
    compare(res.report, "moment", 0, std::vector<Rational>(m.s.begin(), m.s.begin() + static_cast<long>(nm)), e.at("moments"));
    auto table = hankel_table(m, nh - 1);
    compare(res.report, "hankel", 0, table.delta, e.at("hankel"));
    auto lines = expand_forward(line0, e.at("lines").size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        res.report.expect_equal("line-d", lines[i].n, lines[i].d, rational_from_json(e["lines"][i].at("d")));
        res.report.expect_equal("line-v", lines[i].n, lines[i].v, rational_from_json(e["lines"][i].at("v")));
    }
    res.report.merge(verify_forward_hankel(line0, e.at("identities_up_to").get<std::size_t>()));
    res.details["hankel"] = to_json(table.delta);
}

void example4(const json& b, ReproResult& res, const ReproOptions&) {
    const json& e = b.at("expected");
    auto cs = bundle_curve(b);
    auto line0 = ExpansionState::validate(cs.curve, cs.seed);
    const std::size_t nm = e.at("moments").size(), nh = e.at("hankel").size();
    auto m = moments_forward(line0, std::max(nm, 2 * nh));
    compare(res.report, "moment", 0, std::vector<Rational>(m.s.begin(), m.s.begin() + static_cast<long>(nm)), e.at("moments"));
    auto table = hankel_table(m, nh - 1);
    compare(res.report, "hankel", 0, table.delta, e.at("hankel"));
    compare(res.report, "hankel-star", 0, table.delta_star, e.at("hankel_star"));
    res.details["hankel"] = to_json(table.delta);
    res.details["hankel_star"] = to_json(table.delta_star);
}

void example5(const json& b, ReproResult& res, const ReproOptions&) {
    const json& e = b.at("expected");
    auto cs = bundle_curve(b);
    auto line0 = ExpansionState::validate(cs.curve, cs.seed);
    const std::size_t nm = e.at("moments").size(), nh = e.at("hankel").size();
    auto m = moments_backward(line0, std::max(nm, 2 * nh));
    compare(res.report, "moment", 0, std::vector<Rational>(m.s.begin(), m.s.begin() + static_cast<long>(nm)), e.at("moments"));
    auto table = hankel_table(m, nh - 1);
    compare(res.report, "hankel", 0, table.delta, e.at("hankel"));
    for (std::size_t n = 1; n < table.delta.size(); ++n)
        res.report.expect(table.delta[n].sign() == (n % 2 == 0 ? 1 : -1), "alternating-sign", static_cast<long>(n));
    res.report.merge(verify_backward_hankel(line0, e.at("identities_up_to").get<std::size_t>()));
    res.details["hankel"] = to_json(table.delta);
}

void glued(const json& b, ReproResult& res, const ReproOptions&) {
    const json& e = b.at("expected");
    auto cs = bundle_curve(b);
    auto line0 = ExpansionState::validate(cs.curve, cs.seed);
    const long first = e.at("first").get<long>();
    const std::size_t count = e.at("values").size();
    auto t = tau_from_seed(line0, static_cast<std::size_t>(first + static_cast<long>(count)), static_cast<std::size_t>(-first - 1));
    auto got = window(t.tau, first, count);
    compare(res.report, "tau", first, got, e.at("values"));
    res.report.merge(verify_tau(t, line0));
    res.details["tau"] = to_json(IndexedSeq{first, got});
    res.details["gauge"] = json{{"a", to_json(t.gauge.a)}, {"b", to_json(t.gauge.b)}, {"c", to_json(t.gauge.c)}};
}

void somos8(const json& b, ReproResult& res, const ReproOptions&) {
    const json& e = b.at("expected");
    auto cs = bundle_curve(b);
    auto line0 = ExpansionState::validate(cs.curve, cs.seed);
    auto t = tau_from_seed(line0, 12, 10);
    auto det = somos8_detect(t.tau);
    res.report.expect(det.determinants_vanish, "casorati-determinant", 0);
    res.report.expect(det.minor_ratios_constant, "minor-ratios", 0);
    res.report.expect(det.relation.has_value(), "relation-found", 0);
    if (det.relation) {
        res.report.expect(det.relation->k == e.at("k").get<int>(), "order", det.relation->k);
        compare(res.report, "coefficient", 0, det.relation->coefficients, e.at("coefficients"));
        res.report.expect(det.verified_rows >= e.at("min_verified_windows").get<std::size_t>(), "held-out-windows",
                          static_cast<long>(det.verified_rows));
        res.details["relation"] = to_json(*det.relation);
    }
    res.details["training_windows"] = det.training_rows;
    res.details["verified_windows"] = det.verified_rows;
}

void xin_bridge(const json& b, ReproResult& res, const ReproOptions&) {
    const json& e = b.at("expected");
    auto cs = bundle_curve(b);
    auto line0 = ExpansionState::validate(cs.curve, cs.seed);
    auto br = quadratic_bridge(line0, e.at("compare_up_to").get<std::size_t>());
    const json& p = e.at("parameters");
    res.report.expect_equal("alpha", 0, br.alpha, rational_from_json(p.at("alpha")));
    res.report.expect_equal("beta", 0, br.beta, rational_from_json(p.at("beta")));
    res.report.expect_equal("gamma", 0, br.gamma, rational_from_json(p.at("gamma")));
    res.report.expect_equal("t0", 0, br.t0, rational_from_json(p.at("t0")));
    res.report.expect_equal("t1", 0, br.t1, rational_from_json(p.at("t1")));
    compare(res.report, "moment", 0, br.moments, e.at("moments"));
    compare(res.report, "hankel", 0, br.hankel, e.at("hankel"));
    res.report.merge(br.report);
    res.details["hankel"] = to_json(br.hankel);
}

void long_orbit(const json& b, ReproResult& res, const ReproOptions& opt) {
    const json& e = b.at("expected");
    G2State seed = g2_state_from_json(b.at("seed"));
    const std::size_t steps = opt.steps.value_or(e.at("steps").get<std::size_t>());
    auto h0 = g2_invariants(seed);
    auto want = rationals_from_json(e.at("invariants"));
    res.report.expect_equal("H1", 0, h0[0], want.at(0));
    res.report.expect_equal("H2", 0, h0[1], want.at(1));
    auto orbit = g2_lifted_orbit(seed, steps);
    res.report.merge(g2_lifted_orbit_audit(orbit, e.at("exact_prefix").get<std::size_t>(),
                                           e.at("checkpoint_stride").get<std::size_t>()));
    res.report.expect(orbit.steps() >= steps, "steps", static_cast<long>(orbit.steps()));
    if (opt.csv) {
        const double f = seed.params.f.to_double();
        *opt.csv << "n,d,e,v,w,d_prev\n";
        for (std::size_t k = 0; k <= steps; ++k) {
            auto [dp, d, vp, v] = orbit.pair_coordinates(k);
            const double ev = -v - vp, w = d + dp + f + vp * vp;
            *opt.csv << k << ',' << format_double(d) << ',' << format_double(ev) << ',' << format_double(vp) << ','
                     << format_double(w) << ',' << format_double(dp) << '\n';
        }
    }
    res.details["steps"] = steps;
    res.details["invariants"] = to_json(std::vector<Rational>{h0[0], h0[1]});
    res.details["lift_relation"] = to_json(orbit.relation);
    res.details["method"] =
        "integer lift checked against the rational map on a prefix; invariants exact at checkpoints";
}

const std::map<std::string, Runner>& runners() {
    static const std::map<std::string, Runner> r{
        {"somos4-original", somos4_original}, {"example3", example3},     {"example4", example4},
        {"example5", example5},               {"glued-doubtau", glued},   {"somos8", somos8},
        {"xin-bridge", xin_bridge},           {"fig1-orbit", long_orbit},
    };
    return r;
}

}  // namespace

ReproResult run_repro(const std::string& id, const ReproOptions& options) {
    auto it = runners().find(id);
    auto data = repro_bundles().find(id);
    if (it == runners().end() || data == repro_bundles().end()) throw InputError("unknown repro id '" + id + "'");
    ReproResult res;
    res.id = id;
    res.report.name = id;
    json bundle = json::parse(data->second);
    res.details["description"] = bundle.value("description", "");
    it->second(bundle, res, options);
    return res;
}

}  // namespace hypercf::cli
