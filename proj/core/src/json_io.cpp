#include "hypercf/json_io.hpp"

namespace hypercf {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    throw ParseError("rational must be a string, got " + j.dump());
}

json to_json(const Poly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.to_string());
    return a;
}

Poly poly_from_json(const json& j) { return Poly(rationals_from_json(j)); }

json to_json(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back(c.to_string());
    return a;
}

std::vector<Rational> rationals_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals");
    std::vector<Rational> v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

json to_json(const CurveAndSeed& cs) {
    return json{{"genus", cs.curve->genus},
                {"A", to_json(cs.curve->A)},
                {"R", to_json(cs.curve->R)},
                {"P0", to_json(cs.seed.P0)},
                {"Q0", to_json(cs.seed.Q0)}};
}

CurveAndSeed curve_seed_from_json(const json& j) {
    int g = field(j, "genus").get<int>();
    bool degenerate = j.value("allow_degenerate_r", false);
    auto curve = CurveSpec::make(g, poly_from_json(field(j, "A")), poly_from_json(field(j, "R")), degenerate);
    return {curve, SeedLine{poly_from_json(field(j, "P0")), poly_from_json(field(j, "Q0"))}};
}

json to_json(const CFLine& l) {
    return json{{"n", l.n},
                {"u", to_json(l.u)},
                {"v", to_json(l.v)},
                {"d", to_json(l.d)},
                {"P", to_json(l.P)},
                {"Q", to_json(l.Q)}};
}

json to_json(const SomosRelation& r) {
    return json{{"k", r.k}, {"coefficients", to_json(r.coefficients)}, {"window", {r.window_first, r.window_last}}};
}

SomosRelation somos_relation_from_json(const json& j) {
    SomosRelation r;
    r.k = field(j, "k").get<int>();
    r.coefficients = rationals_from_json(field(j, "coefficients"));
    if (r.coefficients.size() != static_cast<std::size_t>(r.k / 2 + 1))
        throw ParseError("a Somos-" + std::to_string(r.k) + " relation has " + std::to_string(r.k / 2 + 1) +
                         " coefficients");
    if (j.contains("window")) {
        r.window_first = j.at("window").at(0).get<long>();
        r.window_last = j.at("window").at(1).get<long>();
    }
    return r;
}

IndexedSeq sequence_from_json(const json& j) {
    if (j.is_array()) return IndexedSeq{0, rationals_from_json(j)};
    IndexedSeq s;
    s.first = j.value("first", 0L);
    if (j.contains("values")) s.values = rationals_from_json(j.at("values"));
    else s.values = rationals_from_json(field(j, "tau"));
    return s;
}

json to_json(const IndexedSeq& s) { return json{{"first", s.first}, {"values", to_json(s.values)}}; }

G1State g1_state_from_json(const json& j) {
    G1State s;
    s.params.f = rational_from_json(field(j, "f"));
    s.params.u = rational_from_json(field(j, "u"));
    s.d = rational_from_json(field(j, "d"));
    s.v = rational_from_json(field(j, "v"));
    return s;
}

G2State g2_state_from_json(const json& j) {
    G2Params p{rational_from_json(field(j, "f")), rational_from_json(field(j, "g")), rational_from_json(field(j, "u"))};
    if (j.contains("d_prev"))
        return G2State::from_pair_coordinates(rational_from_json(j.at("d_prev")), rational_from_json(field(j, "d")),
                                              rational_from_json(field(j, "v_prev")), rational_from_json(field(j, "v")),
                                              p);
    return G2State{rational_from_json(field(j, "d")), rational_from_json(field(j, "e")),
                   rational_from_json(field(j, "v_prev")), rational_from_json(field(j, "w_prev")), p};
}

json to_json(const Report& r) {
    json fails = json::array();
    for (const auto& f : r.failures) fails.push_back(json{{"check", f.check}, {"index", f.index}, {"detail", f.detail}});
    return json{{"name", r.name}, {"ok", r.ok()}, {"checks", r.checks}, {"failures", fails}};
}

}  // namespace hypercf
