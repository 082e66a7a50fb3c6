#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>

namespace hypercf::cli {

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        throw InputError("'" + path + "': " + e.what());
    }
}

// Space-separated integers, or nullopt when some value is not integral.
std::optional<std::string> oeis_line(const std::vector<Rational>& v) {
    std::string s;
    for (const auto& x : v) {
        if (!x.is_integer()) return std::nullopt;
        if (!s.empty()) s += ' ';
        s += x.to_string();
    }
    return s;
}

void print_values(std::ostream& out, std::ostream& err, const std::vector<Rational>& v, bool oeis, const json& full) {
    if (oeis) {
        if (auto line = oeis_line(v)) {
            out << *line << '\n';
            return;
        }
        err << "note: values are not all integral; printing JSON\n";
    }
    out << full.dump() << '\n';
}

struct Options {
    std::string curve = "genus2-sextic";
    int genus = 2;
    std::uint64_t seed = 0;
    std::size_t lines = 10, backward_lines = 0;
    std::size_t count = 12, size = 8, forward = 8, backward = 8;
    std::size_t steps = 100, samples = 20, nmax = 6;
    int kmax = 8;
    bool backward_dir = false, star = false, oeis = false, as_float = false, list = false;
    std::string seed_json, input, relation, csv, repro_id;
    std::optional<std::size_t> repro_steps;
};

CurveAndSeed curve_of(const Options& o, std::size_t forward = 12, std::size_t backward = 8) {
    return load_curve(o.curve, o.genus, o.seed, forward, backward);
}

int cmd_expand(const Options& o, std::ostream& out, std::ostream& err) {
    auto cs = curve_of(o, o.lines, o.backward_lines);
    auto state = ExpansionState::validate(cs.curve, cs.seed);
    auto emit_dir = [&](ExpansionState s, std::size_t count, bool forward) {
        for (std::size_t i = 0; i < count; ++i) {
            try {
                s = forward ? (i == 0 ? s : s.forward()) : s.backward();
            } catch (const SingularStep& e) {
                err << "singular step after line " << s.index() << ": " << e.what() << '\n';
                return false;
            }
            out << to_json(s.line()).dump() << '\n';
        }
        return true;
    };
    if (!emit_dir(state, o.lines, true)) return kFailed;
    if (!emit_dir(state, o.backward_lines, false)) return kFailed;
    return kOk;
}

int cmd_orbit(const Options& o, std::ostream& out, std::ostream& err) {
    json seed = read_json_file(o.seed_json);
    auto cell = [&](const Rational& x) { return o.as_float ? format_double(x.to_double()) : x.to_string(); };
    if (o.genus == 1) {
        G1State s = g1_state_from_json(seed);
        out << "n,d,v\n";
        for (std::size_t n = 0;; ++n) {
            out << n << ',' << cell(s.d) << ',' << cell(s.v) << '\n';
            if (n == o.steps) break;
            try {
                s = g1_step(s);
            } catch (const SingularStep& e) {
                err << "orbit singular after step " << n << ": " << e.what() << '\n';
                return kFailed;
            }
        }
        return kOk;
    }
    if (o.genus != 2) throw InputError("--genus must be 1 or 2");
    G2State s = g2_state_from_json(seed);
    if (o.as_float) {
        // Long float orbits come from the exact integer lift when it applies.
        std::optional<G2LiftedOrbit> lifted;
        if (o.steps > 40) {
            try {
                lifted = g2_lifted_orbit(s, o.steps);
            } catch (const Error& e) {
                err << "note: integer lift unavailable (" << e.what() << "); iterating rationals\n";
            }
        }
        if (lifted) {
            const double f = s.params.f.to_double();
            out << "n,d,e,v,w,d_prev\n";
            for (std::size_t k = 0; k <= o.steps; ++k) {
                auto [dp, d, vp, v] = lifted->pair_coordinates(k);
                out << k << ',' << format_double(d) << ',' << format_double(-v - vp) << ',' << format_double(vp) << ','
                    << format_double(d + dp + f + vp * vp) << ',' << format_double(dp) << '\n';
            }
            return kOk;
        }
    }
    out << (o.as_float ? "n,d,e,v,w,d_prev\n" : "n,d,e,v,w\n");
    for (std::size_t n = 0;; ++n) {
        out << n << ',' << cell(s.d) << ',' << cell(s.e) << ',' << cell(s.v_prev) << ',' << cell(s.w_prev);
        if (o.as_float) out << ',' << cell(s.w_prev - s.d - s.params.f - s.v_prev * s.v_prev);
        out << '\n';
        if (n == o.steps) break;
        try {
            s = g2_step(s);
        } catch (const SingularStep& e) {
            err << "orbit singular after step " << n << ": " << e.what() << '\n';
            return kFailed;
        }
    }
    return kOk;
}

int cmd_moments(const Options& o, std::ostream& out, std::ostream& err) {
    auto cs = curve_of(o);
    auto line0 = ExpansionState::validate(cs.curve, cs.seed);
    auto m = o.backward_dir ? moments_backward(line0, o.count) : moments_forward(line0, o.count);
    print_values(out, err, m.s, o.oeis, to_json(m.s));
    return kOk;
}

int cmd_hankel(const Options& o, std::ostream& out, std::ostream& err) {
    auto cs = curve_of(o);
    auto line0 = ExpansionState::validate(cs.curve, cs.seed);
    auto m = o.backward_dir ? moments_backward(line0, 2 * o.size) : moments_forward(line0, 2 * o.size);
    auto t = hankel_table(m, o.size);
    const auto& v = o.star ? t.delta_star : t.delta;
    print_values(out, err, v, o.oeis, to_json(v));
    return kOk;
}

int cmd_tau(const Options& o, std::ostream& out, std::ostream& err) {
    auto cs = curve_of(o, o.forward, o.backward);
    auto line0 = ExpansionState::validate(cs.curve, cs.seed);
    auto t = tau_from_seed(line0, o.forward, o.backward);
    const IndexedSeq& s = o.star ? t.tau_star : t.tau;
    print_values(out, err, s.values, o.oeis, to_json(s));
    return kOk;
}

int cmd_somos_find(const Options& o, std::ostream& out, std::ostream& err) {
    IndexedSeq seq = sequence_from_json(read_json_file(o.input));
    auto rel = somos_k_find(seq, o.kmax);
    if (!rel) {
        err << "no relation of order <= " << o.kmax << " fits the sequence\n";
        return kFailed;
    }
    out << to_json(*rel).dump() << '\n';
    return kOk;
}

int cmd_somos_verify(const Options& o, std::ostream& out, std::ostream& err) {
    IndexedSeq seq = sequence_from_json(read_json_file(o.input));
    SomosRelation rel = somos_relation_from_json(read_json_file(o.relation));
    long n0 = seq.first, n1 = seq.last() - rel.k;
    if (rel.window_last >= rel.window_first) {
        n0 = std::max(n0, rel.window_first);
        n1 = std::min(n1, rel.window_last);
    }
    if (n1 < n0) throw InputError("sequence does not cover any window of the relation");
    Report r;
    r.name = "somos-verify";
    for (long n = n0; n <= n1; ++n) r.expect_zero("residual", n, somos_residual(rel, seq, n));
    json j = to_json(r);
    j["window"] = {n0, n1};
    out << j.dump() << '\n';
    if (!r.ok()) {
        err << "relation fails at n = " << r.failures.front().index << '\n';
        return kFailed;
    }
    return kOk;
}

Verdict from_report(std::string property, Report r, std::string note = {}) {
    Verdict v;
    v.property = std::move(property);
    if (!r.ok()) v.counterexample = json{{"failure", to_json(r)["failures"][0]}};
    v.report = std::move(r);
    v.note = std::move(note);
    return v;
}

// Glued tau long enough to test relations of order up to kmax.
std::vector<Verdict> relation_suite(const ExpansionState& line0, int genus) {
    std::vector<Verdict> out;
    const int kmax = 1 << (genus + 1);
    const std::size_t total = somos_k_required_length(kmax);
    const std::size_t fwd = total / 2, bwd = total - fwd;
    auto t = tau_from_seed(line0, fwd, bwd);
    out.push_back(from_report("tau-gluing", verify_tau(t, line0)));
    Report found;
    found.name = "relation-search";
    auto rel = somos_k_find(t.tau, kmax);
    found.expect(rel.has_value(), "relation-found", kmax, "no relation of order <= " + std::to_string(kmax));
    Verdict v = from_report("relation-search", found,
                            "exact check on one rational specialization; not a symbolic proof");
    if (rel) v.counterexample = json{{"relation", to_json(*rel)}};
    out.push_back(std::move(v));
    if (genus == 2) {
        auto det = somos8_detect(t.tau);
        Report r;
        r.name = "casorati";
        r.expect(det.determinants_vanish, "determinant", 0);
        r.expect(det.minor_ratios_constant, "minor-ratios", 0);
        out.push_back(from_report("casorati", r, "exact check on one rational specialization; not a symbolic proof"));
    }
    return out;
}

int emit_suite(std::ostream& out, const std::string& suite, const std::vector<Verdict>& v) {
    json j{{"suite", suite}, {"ok", all_ok(v)}, {"results", verdicts_to_json(v)}};
    out << j.dump(2) << '\n';
    return all_ok(v) ? kOk : kFailed;
}

int cmd_verify(const std::string& which, const Options& o, std::ostream& out, std::ostream&) {
    if (which == "theorem2") {
        auto cs = curve_of(o, o.size + 1, o.size + 1);
        auto line0 = ExpansionState::validate(cs.curve, cs.seed);
        return emit_suite(out, which,
                          {from_report("forward-hankel", verify_forward_hankel(line0, o.size)),
                           from_report("backward-hankel", verify_backward_hankel(line0, o.size))});
    }
    if (which == "forward-hankel") {
        auto cs = curve_of(o, o.size + 1, 1);
        auto line0 = ExpansionState::validate(cs.curve, cs.seed);
        return emit_suite(out, which, {from_report("forward-hankel", verify_forward_hankel(line0, o.size))});
    }
    if (which == "backward-hankel") {
        auto cs = curve_of(o, 1, o.size + 1);
        auto line0 = ExpansionState::validate(cs.curve, cs.seed);
        return emit_suite(out, which, {from_report("backward-hankel", verify_backward_hankel(line0, o.size))});
    }
    if (which == "poisson") return emit_suite(out, which, poisson_suite(o.genus, o.samples, o.seed));
    if (which == "identities") return emit_suite(out, which, identities_suite(curve_of(o), o.nmax, o.samples, o.seed));
    if (which == "all") {
        const int kmax = 1 << (o.genus + 1);
        const std::size_t total = somos_k_required_length(kmax);
        auto cs = curve_of(o, std::max<std::size_t>(total, 2 * o.nmax + 2), std::max<std::size_t>(total, 2 * o.nmax + 2));
        auto line0 = ExpansionState::validate(cs.curve, cs.seed);
        const int g = cs.curve->genus;
        std::vector<Verdict> v;
        v.push_back(from_report("forward-hankel", verify_forward_hankel(line0, o.size)));
        v.push_back(from_report("backward-hankel", verify_backward_hankel(line0, std::min<std::size_t>(o.size, 7))));
        for (auto& x : identities_suite(cs, o.nmax, o.samples, o.seed)) v.push_back(std::move(x));
        for (auto& x : poisson_suite(g, o.samples, o.seed)) v.push_back(std::move(x));
        for (auto& x : relation_suite(line0, g)) v.push_back(std::move(x));
        json j{{"suite", "all"}, {"curve", to_json(cs)}, {"ok", all_ok(v)}, {"results", verdicts_to_json(v)}};
        out << j.dump(2) << '\n';
        return all_ok(v) ? kOk : kFailed;
    }
    throw InputError("unknown verify target '" + which + "'");
}

int cmd_repro(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.list) {
        for (const auto& [id, body] : repro_bundles())
            out << id << '\t' << json::parse(body).value("description", "") << '\n';
        return kOk;
    }
    std::vector<std::string> ids;
    if (o.repro_id == "all")
        for (const auto& [id, body] : repro_bundles()) ids.push_back(id);
    else
        ids.push_back(o.repro_id);
    std::ofstream csv;
    ReproOptions ro;
    ro.steps = o.repro_steps;
    if (!o.csv.empty()) {
        csv.open(o.csv);
        if (!csv) throw InputError("cannot write '" + o.csv + "'");
        ro.csv = &csv;
    }
    bool ok = true;
    for (const auto& id : ids) {
        auto res = run_repro(id, ro);
        json j = to_json(res.report);
        j["id"] = id;
        j["details"] = res.details;
        out << j.dump() << '\n';
        if (!res.report.ok()) {
            ok = false;
            err << id << ": " << res.report.failures.size() << " mismatches, first at " << res.report.failures.front().check
                << " index " << res.report.failures.front().index << '\n';
        }
    }
    return ok ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact continued fractions, Hankel determinants and bilinear relations for hyperelliptic curves",
                 "hypercf"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto curve_opts = [&](CLI::App* c) {
        c->add_option("--curve", o.curve, "genus1-quartic, genus2-sextic, random, or a JSON file")
            ->capture_default_str();
        c->add_option("--genus", o.genus, "genus for --curve random")->capture_default_str();
        c->add_option("--seed", o.seed, "seed for --curve random")->capture_default_str();
    };

    auto* expand = app.add_subcommand("expand", "continued-fraction lines as JSON records");
    curve_opts(expand);
    expand->add_option("--lines", o.lines, "forward lines, starting at line 0")->capture_default_str();
    expand->add_option("--backward", o.backward_lines, "lines -1, -2, ...")->capture_default_str();
    expand->callback([&] { action = [&] { return cmd_expand(o, out, err); }; });

    auto* orbit = app.add_subcommand("orbit", "iterate the genus-1 or genus-2 map; CSV output");
    orbit->add_option("--genus", o.genus)->check(CLI::IsMember({1, 2}))->capture_default_str();
    orbit->add_option("--steps", o.steps)->capture_default_str();
    orbit->add_option("--seed-json", o.seed_json, "initial state")->required();
    orbit->add_flag("--float", o.as_float, "lossy decimal columns for plotting");
    orbit->callback([&] { action = [&] { return cmd_orbit(o, out, err); }; });

    auto* moments = app.add_subcommand("moments", "moments of the expansion");
    curve_opts(moments);
    moments->add_option("--count", o.count)->capture_default_str();
    moments->add_flag("--backward", o.backward_dir, "second point at infinity");
    moments->add_flag("--oeis-style", o.oeis, "space-separated integers");
    moments->callback([&] { action = [&] { return cmd_moments(o, out, err); }; });

    auto* hankel = app.add_subcommand("hankel", "Hankel determinants of sizes 0..N");
    curve_opts(hankel);
    hankel->add_option("--size", o.size)->capture_default_str();
    hankel->add_flag("--backward", o.backward_dir, "second point at infinity");
    hankel->add_flag("--star", o.star, "shifted determinants");
    hankel->add_flag("--oeis-style", o.oeis, "space-separated integers");
    hankel->callback([&] { action = [&] { return cmd_hankel(o, out, err); }; });

    auto* tau = app.add_subcommand("tau", "two-sided tau sequence, indices -M-1..N");
    curve_opts(tau);
    tau->add_option("--forward", o.forward)->capture_default_str();
    tau->add_option("--backward", o.backward)->capture_default_str();
    tau->add_flag("--star", o.star, "the companion sequence");
    tau->add_flag("--oeis-style", o.oeis, "space-separated integers");
    tau->callback([&] { action = [&] { return cmd_tau(o, out, err); }; });

    auto* somos = app.add_subcommand("somos", "bilinear relations of sequences");
    somos->require_subcommand(1);
    auto* find = somos->add_subcommand("find", "smallest relation order that fits");
    find->add_option("--input", o.input)->required();
    find->add_option("--kmax", o.kmax)->capture_default_str();
    find->callback([&] { action = [&] { return cmd_somos_find(o, out, err); }; });
    auto* check = somos->add_subcommand("verify", "check a relation on a sequence");
    check->add_option("--input", o.input)->required();
    check->add_option("--relation", o.relation)->required();
    check->callback([&] { action = [&] { return cmd_somos_verify(o, out, err); }; });

    auto* verify = app.add_subcommand("verify", "exact verification suites");
    verify->require_subcommand(1);
    const std::pair<const char*, const char*> suites[] = {
        {"theorem2", "forward-hankel and backward-hankel together"},
        {"forward-hankel", "d_n, v_n against forward Hankel ratios"},
        {"backward-hankel", "backward lines against backward Hankel ratios"},
        {"poisson", "bracket, Casimirs, involution and Poisson-map checks on random points"},
        {"identities", "bordered Hankel determinant identities"},
        {"all", "every suite above plus tau gluing and relation search"},
    };
    for (const auto& [name, help] : suites) {
        auto* v = verify->add_subcommand(name, help);
        curve_opts(v);
        v->add_option("--size", o.size, "largest determinant size")->capture_default_str();
        v->add_option("--samples", o.samples)->capture_default_str();
        v->add_option("--nmax", o.nmax, "largest size for the bordered identities")->capture_default_str();
        std::string which = name;
        v->callback([&, which] { action = [&, which] { return cmd_verify(which, o, out, err); }; });
    }

    auto* repro = app.add_subcommand("repro", "rebuild a stored example and diff it exactly");
    repro->add_option("id", o.repro_id, "bundle id or 'all'");
    repro->add_flag("--list", o.list);
    repro->add_option("--csv", o.csv, "write long-orbit points here");
    repro->add_option("--steps", o.repro_steps, "shorten the long orbit");
    repro->callback([&] {
        if (!o.list && o.repro_id.empty()) throw CLI::ValidationError("repro", "an id or --list is required");
        action = [&] { return cmd_repro(o, out, err); };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadInput;
    }
    if (!action) return kBadInput;
    try {
        return action();
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kBadInput;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << '\n';
        return kBadInput;
    } catch (const InvalidCurve& e) {
        err << "invalid curve: " << e.what() << '\n';
        return kBadInput;
    } catch (const InvalidSeed& e) {
        err << "invalid seed: " << e.what() << '\n';
        return kBadInput;
    } catch (const InsufficientData& e) {
        err << "insufficient data: " << e.what() << '\n';
        return kBadInput;
    } catch (const json::exception& e) {
        err << "input error: " << e.what() << '\n';
        return kBadInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kFailed;
    }
}

}  // namespace hypercf::cli
