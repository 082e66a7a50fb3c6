#pragma once

#include <nlohmann/json.hpp>

#include "hypercf/cfrac.hpp"
#include "hypercf/maps.hpp"
#include "hypercf/report.hpp"
#include "hypercf/somos.hpp"

namespace hypercf {

using json = nlohmann::json;

// Rationals are strings ("p/q" or "p"); polynomials are arrays of rationals in
// ascending degree.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);
json to_json(const Poly& p);
Poly poly_from_json(const json& j);
json to_json(const std::vector<Rational>& v);
std::vector<Rational> rationals_from_json(const json& j);

// {"genus": g, "A": [...], "R": [...], "P0": [...], "Q0": [...]}
json to_json(const CurveAndSeed& cs);
CurveAndSeed curve_seed_from_json(const json& j);

// {"n", "u", "v", "d", "P", "Q"}
json to_json(const CFLine& l);

// {"k", "coefficients", "window": [n0, n1]}
json to_json(const SomosRelation& r);
SomosRelation somos_relation_from_json(const json& j);

// Either an array of rationals (first index 0) or {"first": n0, "values"|"tau": [...]}.
IndexedSeq sequence_from_json(const json& j);
json to_json(const IndexedSeq& s);

// {"genus": 1, "f", "u", "d", "v"} or
// {"genus": 2, "f", "g", "u"} plus either {"d", "e", "v_prev", "w_prev"} or
// {"d_prev", "d", "v_prev", "v"}.
G1State g1_state_from_json(const json& j);
G2State g2_state_from_json(const json& j);

json to_json(const Report& r);

}  // namespace hypercf
