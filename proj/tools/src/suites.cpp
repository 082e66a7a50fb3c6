#include <charconv>
#include <fstream>
#include <random>

#include "cli.hpp"

namespace hypercf::cli {

std::string format_double(double x) {
    if (x == 0) x = 0;  // no "-0"
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

CurveAndSeed load_curve(const std::string& spec, int genus, std::uint64_t seed, std::size_t forward,
                        std::size_t backward) {
    if (spec == "genus1-quartic") return genus1_quartic_example();
    if (spec == "genus2-sextic") return genus2_sextic_example();
    if (spec == "random") {
        if (genus < 1) throw InputError("--curve random needs --genus >= 1");
        std::mt19937_64 rng(seed);
        return random_regular_curve_seed(genus, rng, forward, backward);
    }
    std::ifstream in(spec);
    if (!in) throw InputError("cannot open curve file '" + spec + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError("curve file '" + spec + "': " + e.what());
    }
    return curve_seed_from_json(j);
}

json verdicts_to_json(const std::vector<Verdict>& v) {
    json out = json::array();
    for (const auto& x : v) {
        json j = to_json(x.report);
        j["property"] = x.property;
        if (!x.counterexample.is_null()) j["counterexample"] = x.counterexample;
        if (!x.note.empty()) j["note"] = x.note;
        out.push_back(std::move(j));
    }
    return out;
}

bool all_ok(const std::vector<Verdict>& v) {
    for (const auto& x : v)
        if (!x.report.ok()) return false;
    return true;
}

namespace {

Rational small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    return Rational(num(rng)) / Rational(den(rng));
}

json coordinates_json(const std::vector<Rational>& x) { return to_json(x); }

struct PoissonSample {
    LaxPoint point;
    std::vector<Rational> roots;
    Rational z, w;
    std::vector<Rational> spectral;
};

Report antisymmetry_check(const LaxPoint& p) {
    Report r;
    r.name = "antisymmetry";
    RationalMatrix m = lax_poisson_matrix(p);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            r.expect_zero("antisymmetry", static_cast<long>(i * m.cols() + j), m(i, j) + m(j, i));
    return r;
}

// Collects per-sample reports into one verdict per property, in sample order.
std::vector<Verdict> aggregate(const std::vector<std::string>& names, const std::vector<std::vector<Report>>& per_sample,
                               const std::vector<json>& sample_dumps) {
    std::vector<Verdict> out;
    for (std::size_t k = 0; k < names.size(); ++k) {
        Verdict v;
        v.property = names[k];
        v.report.name = names[k];
        for (std::size_t i = 0; i < per_sample.size(); ++i) {
            const Report& r = per_sample[i][k];
            if (!r.ok() && v.counterexample.is_null())
                v.counterexample = json{{"sample", i}, {"input", sample_dumps[i]}, {"failure", to_json(r)["failures"][0]}};
            v.report.merge(r);
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

std::vector<Verdict> poisson_suite(int genus, std::size_t samples, std::uint64_t seed) {
    if (genus < 1) throw InputError("--genus must be at least 1");
    std::mt19937_64 rng(seed);
    std::vector<PoissonSample> pts;
    for (std::size_t i = 0; i < samples; ++i) {
        PoissonSample s;
        // Redraw points whose image under the step leaves the chart (deg Q~ < g).
        for (;;) {
            s.point = random_lax_point(genus, rng, true, &s.roots);
            try {
                (void)bt_step(s.point);
                break;
            } catch (const InvalidCurve&) {
            }
        }
        s.z = small_rational(rng);
        do s.w = small_rational(rng);
        while (s.w == s.z);
        for (int k = 0; k < 3; ++k) s.spectral.push_back(small_rational(rng));
        pts.push_back(std::move(s));
    }
    const std::vector<std::string> names{"antisymmetry", "jacobi",    "casimirs",       "involution",
                                         "canonical-pairs", "rank",  "lax-form",       "bracket-degree",
                                         "poisson-map"};
    auto per_sample = parallel_map(pts.size(), [&](std::size_t i) {
        const auto& s = pts[i];
        return std::vector<Report>{antisymmetry_check(s.point),
                                   jacobi_check(s.point),
                                   casimir_check(s.point),
                                   hamiltonian_involution(s.point, s.spectral),
                                   canonical_pairs_check(s.point, s.roots),
                                   rank_check(s.point),
                                   lax_form_check(s.point, s.z, s.w),
                                   bracket_degree_check(s.point, s.z),
                                   poisson_map_check(s.point, s.z, s.w)};
    });
    std::vector<json> dumps;
    for (const auto& s : pts)
        dumps.push_back(json{{"coordinates", coordinates_json(s.point.coordinates())},
                             {"z", to_json(s.z)},
                             {"w", to_json(s.w)}});
    return aggregate(names, per_sample, dumps);
}

std::vector<Verdict> identities_suite(const CurveAndSeed& cs, std::size_t nmax, std::size_t samples,
                                      std::uint64_t seed) {
    auto line0 = ExpansionState::validate(cs.curve, cs.seed);
    std::vector<Verdict> out;
    auto curve_verdict = [&](const std::string& name, const MomentSeq& m) {
        Verdict v;
        v.property = name;
        v.report = bordered_hankel_identities(m.s, nmax);
        v.report.name = name;
        if (!v.report.ok()) v.counterexample = json{{"moments", to_json(m.s)}};
        out.push_back(std::move(v));
    };
    curve_verdict("curve-forward", moments_forward(line0, 2 * nmax + 1));
    curve_verdict("curve-backward", moments_backward(line0, 2 * nmax + 1));

    std::mt19937_64 rng(seed);
    std::vector<std::vector<Rational>> data;
    for (std::size_t i = 0; i < samples; ++i) {
        std::vector<Rational> s;
        for (std::size_t j = 0; j < 2 * nmax + 1; ++j) s.push_back(small_rational(rng));
        data.push_back(std::move(s));
    }
    auto per_sample = parallel_map(data.size(), [&](std::size_t i) {
        return std::vector<Report>{bordered_hankel_identities(data[i], nmax)};
    });
    std::vector<json> dumps;
    for (const auto& s : data) dumps.push_back(json{{"moments", to_json(s)}});
    auto random = aggregate({"random-hankel"}, per_sample, dumps);
    out.push_back(std::move(random.front()));
    return out;
}

}  // namespace hypercf::cli
